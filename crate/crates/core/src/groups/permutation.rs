use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` in one-line notation.
///
/// Composition is right-to-left: `p.compose(&q)` maps `i` to `p(q(i))`.
/// Every cocycle exponent and sector identification downstream depends on
/// this convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Orbits of a set of permutations on `{0, .., n-1}`.
///
/// Blocks are sorted ascending and ordered by their minimal element; this
/// canonical order fixes tensor-factor positions everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of `a` and `b` (0-based, `a != b`).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(
            a < n && b < n && a != b,
            "bad transposition ({a} {b}) in S_{n}"
        );
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Builds from disjoint cycles given as 0-based point lists.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside 1..{n}",
                        a + 1
                    )));
                }
                if used[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated",
                        a + 1
                    )));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4)"`; `"e"` and `"()"`
    /// denote the identity and fixed points may be omitted.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| match p.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Parse(format!("bad point {p:?} in {s:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ q)(i) = self(q(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.n() != q.n() {
            return Err(Error::DegreeMismatch(self.n(), q.n()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `g h g⁻¹` with `g = self`.
    pub fn conjugate(&self, h: &Permutation) -> Result<Permutation> {
        self.compose(h)?.compose(&self.inverse())
    }

    /// Cycle decomposition including fixed points.
    pub fn cycles(&self) -> OrbitPartition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                block.push(x);
                x = self.images[x];
            }
            block.sort_unstable();
            blocks.push(block);
        }
        OrbitPartition { n, blocks }
    }

    /// Number of cycles `l(σ)`.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Minimal transposition word length `|σ| = n − l(σ)`.
    pub fn degree(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// `(−1)^{|σ|}`.
    pub fn sign(&self) -> i64 {
        if self.degree().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sorted cycle lengths, longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().blocks().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// `|pq| = |p| + |q|`.
    pub fn is_transversal(&self, q: &Permutation) -> Result<bool> {
        Ok(self.compose(q)?.degree() == self.degree() + q.degree())
    }

    /// The deterministic minimal word `σ = τ₁ ∘ τ₂ ∘ … ∘ τ_{|σ|}`, peeled
    /// from the right: the last letter is `(a σ(a))` for the smallest moved
    /// point `a`, and `σ ∘ (a σ(a))` fixes `a`; repeat on the remainder.
    /// For `(1 2 3)` this gives `(1 3)(1 2)`.
    pub fn minimal_word(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut word = Vec::with_capacity(self.degree());
        let mut rest = self.clone();
        while let Some(a) = (0..n).find(|&i| rest.images[i] != i) {
            let t = Permutation::transposition(n, a, rest.images[a]);
            rest = rest.compose(&t).expect("same degree");
            word.push(t);
        }
        word.reverse();
        word
    }

    /// Every minimal transposition word for `self`, in lexicographic order
    /// of the (0-based) transposition pairs.
    pub fn all_minimal_words(&self) -> Vec<Vec<Permutation>> {
        let n = self.n();
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let d = self.degree();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let t = Permutation::transposition(n, a, b);
                let rest = t.compose(self).expect("same degree");
                if rest.degree() + 1 == d {
                    for mut tail in rest.all_minimal_words() {
                        tail.insert(0, t.clone());
                        out.push(tail);
                    }
                }
            }
        }
        out
    }

    /// 1-based cycle notation with fixed points omitted; `"e"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        let mut s = String::new();
        for block in self.cycles().blocks() {
            if block.len() < 2 {
                continue;
            }
            // Walk the cycle from its minimal element.
            let mut pts = vec![block[0]];
            let mut x = self.images[block[0]];
            while x != block[0] {
                pts.push(x);
                x = self.images[x];
            }
            let body: Vec<String> = pts.iter().map(|p| (p + 1).to_string()).collect();
            s.push('(');
            s.push_str(&body.join(" "));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.to_cycle_string())
    }
}

impl OrbitPartition {
    /// Canonicalizes arbitrary disjoint blocks covering `{0..n-1}`.
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || seen[x] {
                    return Err(Error::Shape(format!("blocks do not partition 0..{n}")));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) || blocks.iter().any(Vec::is_empty) {
            return Err(Error::Shape(format!("blocks do not partition 0..{n}")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(OrbitPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `block_of()[i]` is the index of the block containing point `i`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = k;
            }
        }
        out
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &OrbitPartition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let owner = coarser.block_of();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| owner[x] == owner[b[0]]))
    }
}

/// Orbits of `⟨gens⟩` on `{0..n-1}`; the block count is `l(σ₁, …, σ_k)`.
///
/// `n` is required when `gens` is empty.
pub fn group_orbits(gens: &[Permutation], n: Option<usize>) -> Result<OrbitPartition> {
    let n = match (gens.first(), n) {
        (Some(g), Some(m)) if g.n() != m => return Err(Error::DegreeMismatch(g.n(), m)),
        (Some(g), _) => g.n(),
        (None, Some(m)) => m,
        (None, None) => {
            return Err(Error::Shape("empty generator list without a degree".into()));
        }
    };
    if let Some(bad) = gens.iter().find(|g| g.n() != n) {
        return Err(Error::DegreeMismatch(n, bad.n()));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_block[r]].push(i);
    }
    OrbitPartition::from_blocks(n, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn compose_right_to_left() {
        // 1→2→3, 2→1→1... evaluated pointwise: (123)∘(12) = (13).
        assert_eq!(
            p("(1 2 3)", 3).compose(&p("(1 2)", 3)).unwrap(),
            p("(1 3)", 3)
        );
        assert_eq!(
            p("e", 3).compose(&p("(1 2 3)", 3)).unwrap(),
            p("(1 2 3)", 3)
        );
        assert!(p("(1 2)", 3).compose(&p("(1 2)", 3)).unwrap().is_identity());
        assert_eq!(
            p("(1 2)", 3).compose(&p("(1 2)", 4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn cycles_and_degrees() {
        assert_eq!(p("(1 2)", 3).cycles().blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(p("e", 4).cycles().len(), 4);
        assert_eq!(p("(1 2 3)", 3).cycles().blocks(), &[vec![0, 1, 2]]);
        assert_eq!(p("(1 2)", 3).degree(), 1);
        assert_eq!(p("e", 3).degree(), 0);
        assert_eq!(p("(1 2 3)", 3).degree(), 2);
        assert_eq!(p("(1 2 3)", 3).sign(), 1);
    }

    #[test]
    fn orbits_of_generators() {
        let o = group_orbits(&[p("(1 2)", 3), p("(1 3)", 3)], None).unwrap();
        assert_eq!(o.blocks(), &[vec![0, 1, 2]]);
        assert_eq!(group_orbits(&[p("e", 4)], None).unwrap().len(), 4);
        let o = group_orbits(&[p("(1 2)", 4), p("(3 4)", 4)], None).unwrap();
        assert_eq!(o.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert!(group_orbits(&[], None).is_err());
        assert_eq!(group_orbits(&[], Some(3)).unwrap().len(), 3);
    }

    #[test]
    fn transversality() {
        assert!(p("(1 2)", 4).is_transversal(&p("(3 4)", 4)).unwrap());
        assert!(!p("(1 2)", 4).is_transversal(&p("(1 2)", 4)).unwrap());
        assert!(p("(1 2)", 3).is_transversal(&p("(1 3)", 3)).unwrap());
    }

    #[test]
    fn conjugation_relabels() {
        let c = p("(1 2)", 3).conjugate(&p("(1 3)", 3)).unwrap();
        assert_eq!(c, p("(2 3)", 3));
        assert!(p("(1 2 3)", 3).conjugate(&p("e", 3)).unwrap().is_identity());
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in ["e", "(1 2)", "(1 3 2)", "(1 2)(3 4)", "(1 4 2 3)"] {
            assert_eq!(p(s, 4).to_cycle_string(), s);
        }
        assert_eq!(p("()", 3), Permutation::identity(3));
        assert_eq!(p("(2 1)", 3).to_cycle_string(), "(1 2)");
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("(1 2", 3).is_err());
    }

    #[test]
    fn minimal_words_multiply_back() {
        for s in ["(1 2 3)", "(1 2)(3 4)", "(1 4 2 3)", "e"] {
            let sigma = p(s, 4);
            let words = sigma.all_minimal_words();
            assert!(words.contains(&sigma.minimal_word()));
            for w in words {
                assert_eq!(w.len(), sigma.degree());
                let prod = w
                    .iter()
                    .fold(Permutation::identity(4), |acc, t| acc.compose(t).unwrap());
                assert_eq!(prod, sigma);
            }
        }
        assert_eq!(
            p("(1 2 3)", 3).minimal_word(),
            vec![p("(1 3)", 3), p("(1 2)", 3)]
        );
        let w = p("(1 2 3)", 3).all_minimal_words();
        assert!(w.contains(&vec![p("(1 3)", 3), p("(1 2)", 3)]));
        assert_eq!(p("(1 2 3 4)", 4).all_minimal_words().len(), 16);
    }
}
