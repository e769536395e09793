//! Zariski-closed subsets of a free group in component form: finitely many
//! points together with finitely many cosets `a⟨r⟩` of maximal cyclic
//! subgroups.
//!
//! Every value is canonical, so `==` is extensional equality.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::Result;
use crate::onevar::check_root;
use crate::word::{orient, Word};

/// The left coset `rep · ⟨root⟩` of a maximal cyclic subgroup.
///
/// `root` is primitive and the lexicographically smaller of `r`, `r⁻¹`;
/// `rep` is the shortlex-least element of the coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCoset {
    rep: Word,
    root: Word,
}

impl CyclicCoset {
    /// Canonicalizes `rep · ⟨root⟩`. Rejects trivial and non-primitive roots.
    pub fn new(rep: Word, root: Word) -> Result<Self> {
        check_root(&root)?;
        let root = orient(root);
        let rep = minimal_rep(&rep, &root);
        Ok(CyclicCoset { rep, root })
    }

    pub fn subgroup(root: Word) -> Result<Self> {
        Self::new(Word::identity(), root)
    }

    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    /// `rep · root^m`.
    pub fn element(&self, m: i64) -> Word {
        self.rep.multiply(&self.root.pow(m))
    }

    pub fn contains(&self, g: &Word) -> bool {
        self.rep
            .inverse()
            .multiply(g)
            .power_of(&self.root)
            .is_some()
    }

    /// Coset elements of length at most `radius`, sorted.
    pub fn elements_in_ball(&self, radius: usize) -> Vec<Word> {
        // |rep·r^m| ≥ |m|·|core| − |rep|
        let core = self.root.cyclic_reduce().core.len();
        let bound = ((radius + self.rep.len()) / core + 1) as i64;
        let mut out: Vec<Word> = (-bound..=bound)
            .map(|m| self.element(m))
            .filter(|g| g.len() <= radius)
            .collect();
        out.sort();
        out
    }
}

impl Ord for CyclicCoset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rep
            .cmp(&other.rep)
            .then_with(|| self.root.cmp(&other.root))
    }
}

impl PartialOrd for CyclicCoset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortest element of `a⟨r⟩`. Since `|a·r^m| ≥ |r^m| − |a|` and
/// `|r^m| ≥ |m|·|core(r)|`, any `m` beating `m = 0` has `|m| ≤ 2|a|/|core|`.
fn minimal_rep(a: &Word, root: &Word) -> Word {
    let core = root.cyclic_reduce().core.len();
    let bound = (2 * a.len() / core).max(a.len() + root.len()) as i64 + 2;
    (-bound..=bound)
        .map(|m| a.multiply(&root.pow(m)))
        .min()
        .expect("nonempty range")
}

pub fn coset_member(c: &CyclicCoset, g: &Word) -> bool {
    c.contains(g)
}

/// Intersection of two canonical cosets: the coset itself, nothing, or a
/// single point.
pub fn intersect_cosets(c1: &CyclicCoset, c2: &CyclicCoset) -> AlgebraicSet {
    if c1 == c2 {
        return AlgebraicSet::from_coset(c1.clone());
    }
    if c1.root == c2.root {
        return AlgebraicSet::empty();
    }
    // a·r^m = b·s^n has at most one solution when ⟨r⟩ ≠ ⟨s⟩; cancellation
    // between powers of non-commensurable words is shorter than |r| + |s|.
    let (a, r, b, s) = (&c1.rep, &c1.root, &c2.rep, &c2.root);
    let bound = (a.len() + b.len() + 2 * (r.len() + s.len()) + 4) as i64;
    let b_inv = b.inverse();
    for m in -bound..=bound {
        let g = a.multiply(&r.pow(m));
        if b_inv.multiply(&g).power_of(s).is_some() {
            return AlgebraicSet::from_point(g);
        }
    }
    AlgebraicSet::empty()
}

/// A finite union of points and cyclic cosets in canonical form: no point
/// lies in a listed coset, cosets are distinct, both lists are sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraicSet {
    points: Vec<Word>,
    cosets: Vec<CyclicCoset>,
}

impl AlgebraicSet {
    pub fn empty() -> Self {
        AlgebraicSet::default()
    }

    pub fn from_point(g: Word) -> Self {
        AlgebraicSet {
            points: vec![g],
            cosets: Vec::new(),
        }
    }

    pub fn from_coset(c: CyclicCoset) -> Self {
        AlgebraicSet {
            points: Vec::new(),
            cosets: vec![c],
        }
    }

    /// Builds a canonical set from raw components. Coset roots must be
    /// nontrivial and primitive; representatives may be arbitrary.
    pub fn canonicalize(points: Vec<Word>, cosets: Vec<(Word, Word)>) -> Result<Self> {
        let cosets = cosets
            .into_iter()
            .map(|(rep, root)| CyclicCoset::new(rep, root))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(points, cosets))
    }

    /// Like [`canonicalize`](Self::canonicalize) for cosets already in
    /// canonical form.
    pub fn from_parts(points: Vec<Word>, cosets: Vec<CyclicCoset>) -> Self {
        let cosets: Vec<CyclicCoset> = cosets
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let points: Vec<Word> = points
            .into_iter()
            .filter(|p| !cosets.iter().any(|c| c.contains(p)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        AlgebraicSet { points, cosets }
    }

    pub fn points(&self) -> &[Word] {
        &self.points
    }

    pub fn cosets(&self) -> &[CyclicCoset] {
        &self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.cosets.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.cosets.is_empty()
    }

    /// `(number of cosets, number of points)`; strictly decreases
    /// lexicographically along strict inclusions.
    pub fn measure(&self) -> (usize, usize) {
        (self.cosets.len(), self.points.len())
    }

    pub fn contains(&self, g: &Word) -> bool {
        self.points.binary_search(g).is_ok() || self.cosets.iter().any(|c| c.contains(g))
    }

    pub fn union(&self, other: &AlgebraicSet) -> AlgebraicSet {
        let points = self.points.iter().chain(&other.points).cloned().collect();
        let cosets = self.cosets.iter().chain(&other.cosets).cloned().collect();
        Self::from_parts(points, cosets)
    }

    pub fn intersect(&self, other: &AlgebraicSet) -> AlgebraicSet {
        let mut points: Vec<Word> = self
            .points
            .iter()
            .filter(|p| other.contains(p))
            .chain(other.points.iter().filter(|p| self.contains(p)))
            .cloned()
            .collect();
        let mut cosets = Vec::new();
        for c1 in &self.cosets {
            for c2 in &other.cosets {
                let part = intersect_cosets(c1, c2);
                points.extend(part.points);
                cosets.extend(part.cosets);
            }
        }
        Self::from_parts(points, cosets)
    }

    /// An infinite coset inside a finite union must sit inside one coset of
    /// it, since distinct cosets share at most one element.
    pub fn is_subset(&self, other: &AlgebraicSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
            && self.cosets.iter().all(|c| {
                other.cosets.iter().any(|d| {
                    c.root.power_of(&d.root).is_some()
                        && d.rep.inverse().multiply(&c.rep).power_of(&d.root).is_some()
                })
            })
    }

    pub fn equals(&self, other: &AlgebraicSet) -> bool {
        self == other
    }

    /// All members of length at most `radius`.
    pub fn restrict_to_ball(&self, radius: usize) -> BTreeSet<Word> {
        self.points
            .iter()
            .filter(|p| p.len() <= radius)
            .cloned()
            .chain(self.cosets.iter().flat_map(|c| c.elements_in_ball(radius)))
            .collect()
    }
}

/// A Zariski-closed set: either the whole group or a proper set in component
/// form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedSet {
    WholeGroup,
    Set(AlgebraicSet),
}

impl ClosedSet {
    pub fn contains(&self, g: &Word) -> bool {
        match self {
            ClosedSet::WholeGroup => true,
            ClosedSet::Set(s) => s.contains(g),
        }
    }

    pub fn as_set(&self) -> Option<&AlgebraicSet> {
        match self {
            ClosedSet::WholeGroup => None,
            ClosedSet::Set(s) => Some(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// Every set contains its successor.
    pub descending: bool,
    /// Length of the longest prefix `S₀ ⊋ S₁ ⊋ …`.
    pub strict_prefix_length: usize,
    /// First index from which all sets are equal.
    pub stabilization_index: usize,
    /// Indices `i` with `S_{i+1} ⊊ S_i` whose measure failed to drop.
    pub measure_violations: Vec<usize>,
}

impl ChainReport {
    pub fn measure_ok(&self) -> bool {
        self.measure_violations.is_empty()
    }
}

pub fn chain_check(chain: &[AlgebraicSet]) -> ChainReport {
    let mut descending = true;
    let mut strict_prefix_length = chain.len().min(1);
    let mut strict_run = true;
    let mut measure_violations = Vec::new();
    for (i, pair) in chain.windows(2).enumerate() {
        let (big, small) = (&pair[0], &pair[1]);
        let contained = small.is_subset(big);
        let strict = contained && small != big;
        descending &= contained;
        if strict {
            if small.measure() >= big.measure() {
                measure_violations.push(i);
            }
            if strict_run {
                strict_prefix_length += 1;
            }
        } else {
            strict_run = false;
        }
    }
    let stabilization_index = match chain.last() {
        None => 0,
        Some(last) => chain.iter().rposition(|s| s != last).map_or(0, |i| i + 1),
    };
    ChainReport {
        descending,
        strict_prefix_length,
        stabilization_index,
        measure_violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::word::Alphabet;

    fn w(text: &str) -> Word {
        Alphabet::new(["a", "b"]).unwrap().parse(text).unwrap()
    }

    fn coset(rep: &str, root: &str) -> CyclicCoset {
        CyclicCoset::new(w(rep), w(root)).unwrap()
    }

    fn sub(root: &str) -> AlgebraicSet {
        AlgebraicSet::from_coset(coset("1", root))
    }

    fn pts(ps: &[&str]) -> AlgebraicSet {
        AlgebraicSet::from_parts(ps.iter().map(|p| w(p)).collect(), Vec::new())
    }

    #[test]
    fn coset_canonical_form() {
        let c = coset("a^3", "a^-1");
        assert_eq!((c.rep(), c.root()), (&Word::identity(), &w("a")));
        let c = coset("b a^-2", "a");
        assert_eq!(c.rep(), &w("b"));
        // rep a^10 with root a needs |m| = 10
        assert_eq!(coset("b a^10", "a").rep(), &w("b"));
        let c = coset("b a", "b a b^-1");
        assert_eq!(c.rep(), &w("b a"));
        assert_eq!(CyclicCoset::new(w("1"), w("1")), Err(Error::TrivialRoot));
        assert_eq!(
            CyclicCoset::new(w("1"), w("a^2")),
            Err(Error::NonPrimitiveRoot { exponent: 2 })
        );
    }

    #[test]
    fn coset_member_examples() {
        assert!(coset("1", "a").contains(&w("a^5")));
        assert!(coset("b", "a").contains(&w("b a^-2")));
        assert!(!coset("1", "a b").contains(&w("b a")));
        // oracle: b a is not (a b)^m for |m| ≤ 3
        let ab = w("a b");
        assert!((-3..=3).all(|m| ab.pow(m) != w("b a")));
    }

    #[test]
    fn member_examples() {
        let s = pts(&["a^2"]).union(&sub("b"));
        assert!(s.contains(&w("b^-4")));
        assert!(!s.contains(&w("a")));
        assert!(!AlgebraicSet::empty().contains(&Word::identity()));
    }

    #[test]
    fn intersect_cosets_examples() {
        assert_eq!(
            intersect_cosets(&coset("1", "a"), &coset("1", "b")),
            pts(&["1"])
        );
        assert_eq!(
            intersect_cosets(&coset("a", "b"), &coset("b", "a")),
            AlgebraicSet::empty()
        );
        assert_eq!(
            intersect_cosets(&coset("a", "b"), &coset("a", "b")),
            AlgebraicSet::from_coset(coset("a", "b"))
        );
        assert_eq!(
            intersect_cosets(&coset("1", "a"), &coset("b", "a")),
            AlgebraicSet::empty()
        );
    }

    #[test]
    fn set_op_examples() {
        assert_eq!(sub("a").union(&pts(&["a^3"])), sub("a"));
        assert_eq!(sub("a").union(&sub("b")).intersect(&sub("a")), sub("a"));
        assert_eq!(sub("a").intersect(&pts(&["a^2", "b"])), pts(&["a^2"]));
    }

    #[test]
    fn subset_examples() {
        assert!(!AlgebraicSet::from_coset(coset("a", "b")).is_subset(&sub("b")));
        assert!(pts(&["a^2"]).union(&sub("a")).equals(&sub("a")));
        assert!(pts(&["1", "a"]).is_subset(&sub("a")));
        assert!(!sub("a").is_subset(&pts(&["1", "a"])));
    }

    #[test]
    fn canonicalize_examples() {
        let s = AlgebraicSet::canonicalize(vec![w("a^2"), w("a^-1")], vec![(w("a^3"), w("a^-1"))])
            .unwrap();
        assert_eq!(s, sub("a"));
        assert_eq!(
            AlgebraicSet::canonicalize(vec![], vec![(w("1"), w("a^2"))]),
            Err(Error::NonPrimitiveRoot { exponent: 2 })
        );
        assert_eq!(
            AlgebraicSet::canonicalize(vec![], vec![]).unwrap(),
            AlgebraicSet::empty()
        );
    }

    #[test]
    fn chain_examples() {
        let r = chain_check(&[sub("a").union(&sub("b")), sub("a"), pts(&["1"])]);
        assert!(r.descending && r.measure_ok());
        assert_eq!(r.strict_prefix_length, 3);
        assert_eq!(r.stabilization_index, 2);

        let r = chain_check(&[sub("a"), sub("a"), sub("a")]);
        assert_eq!(r.stabilization_index, 0);
        assert_eq!(r.strict_prefix_length, 1);
        assert!(r.descending);

        let r = chain_check(&[pts(&["a"]), sub("a")]);
        assert!(!r.descending);

        let r = chain_check(&[]);
        assert_eq!((r.strict_prefix_length, r.stabilization_index), (0, 0));
    }

    #[test]
    fn ball_restriction() {
        let c = coset("b", "a");
        let got: Vec<Word> = c.elements_in_ball(3);
        let mut expect: Vec<Word> = ["b", "b a", "b a^-1", "b a^2", "b a^-2"]
            .iter()
            .map(|t| w(t))
            .collect();
        expect.sort();
        assert_eq!(got, expect);
    }
}
