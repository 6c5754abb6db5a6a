//! Point topologies on the ideal set of a finite semiring.
//!
//! Points are ideals. Each ideal I names one subbasic closed set, read under
//! one of two semantics:
//!
//! * `DownSet`: the ideals contained in the subtractive closure of I,
//! * `FixedPoint`: the single ideal equal to the subtractive closure of I.
//!
//! The closed family is the least collection containing the subbasis, the
//! empty set, and the whole space that is closed under binary union and
//! intersection. Point closures, separation checks, irreducibility, and maps
//! induced by semiring homomorphisms are all computed against that family.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ideal::IdealLattice;
use crate::semiring::Homomorphism;

/// How an ideal names its subbasic closed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    DownSet,
    FixedPoint,
}

impl Semantics {
    pub const BOTH: [Semantics; 2] = [Semantics::DownSet, Semantics::FixedPoint];
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::DownSet => "downset",
            Semantics::FixedPoint => "fixedpoint",
        })
    }
}

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("closed family exceeds the cap of {cap} sets")]
    ClosedFamilyCap { cap: usize },
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("preimage {set} is not an enumerated ideal")]
    PreimageNotIdeal { set: String },
}

/// Set of points (ideal indices) of one space, packed into 64-bit blocks.
/// Bits at or past the point count stay zero, so derived equality and
/// ordering are exact.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    blocks: Vec<u64>,
}

impl PointSet {
    pub fn empty(points: usize) -> PointSet {
        PointSet { blocks: vec![0; points.div_ceil(64)] }
    }

    pub fn full(points: usize) -> PointSet {
        let mut s = PointSet::empty(points);
        for p in 0..points {
            s.insert(p);
        }
        s
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: usize, iter: I) -> PointSet {
        let mut s = PointSet::empty(points);
        for p in iter {
            s.insert(p);
        }
        s
    }

    pub fn singleton(points: usize, p: usize) -> PointSet {
        PointSet::from_points(points, [p])
    }

    pub fn contains(&self, p: usize) -> bool {
        self.blocks.get(p / 64).is_some_and(|b| b >> (p % 64) & 1 == 1)
    }

    pub fn insert(&mut self, p: usize) {
        self.blocks[p / 64] |= 1 << (p % 64);
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.blocks.len(), other.blocks.len());
        PointSet {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersect(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.blocks.len(), other.blocks.len());
        PointSet {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(k, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(64 * k + i)
                }
            })
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The ideal set of a semiring with its subbasic closed sets under one
/// semantics.
#[derive(Debug)]
pub struct SubtractiveSpace {
    lattice: Arc<IdealLattice>,
    semantics: Semantics,
    subbasis: Vec<PointSet>,
    namers: Vec<usize>,
}

impl SubtractiveSpace {
    pub fn build(lattice: Arc<IdealLattice>, semantics: Semantics) -> SubtractiveSpace {
        let n = lattice.len();
        let mut subbasis: Vec<PointSet> = Vec::new();
        let mut namers: Vec<usize> = Vec::new();
        let mut seen: HashSet<PointSet> = HashSet::new();
        for i in 0..n {
            let closure = lattice.closure_of(i);
            let set = match semantics {
                Semantics::DownSet => {
                    let bound = lattice.ideal(closure).members();
                    PointSet::from_points(
                        n,
                        (0..n).filter(|&j| lattice.ideal(j).members().is_subset(bound)),
                    )
                }
                Semantics::FixedPoint => PointSet::singleton(n, closure),
            };
            if seen.insert(set.clone()) {
                subbasis.push(set);
                namers.push(i);
            }
        }
        SubtractiveSpace { lattice, semantics, subbasis, namers }
    }

    pub fn lattice(&self) -> &Arc<IdealLattice> {
        &self.lattice
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn points(&self) -> usize {
        self.lattice.len()
    }

    /// Distinct subbasic closed sets, in order of their first naming ideal.
    pub fn subbasis(&self) -> &[PointSet] {
        &self.subbasis
    }

    /// Lattice index of the first ideal naming subbasic set `k`.
    pub fn namer(&self, k: usize) -> usize {
        self.namers[k]
    }

    /// Closure of one point: the intersection of all subbasic sets holding
    /// it, or the whole space when none does. Equals the least closed set
    /// containing the point.
    pub fn point_closure(&self, p: usize) -> PointSet {
        let mut acc = PointSet::full(self.points());
        for s in &self.subbasis {
            if s.contains(p) {
                acc = acc.intersect(s);
            }
        }
        acc
    }

    /// Points whose ideal is subtractive.
    pub fn subtractive_points(&self) -> PointSet {
        PointSet::from_points(self.points(), self.lattice.subtractive_indices())
    }

    /// Least family containing the subbasis, the empty set, and the whole
    /// space, closed under binary union and intersection.
    pub fn closed_family(&self, cap: usize) -> Result<ClosedFamily, TopologyError> {
        let n = self.points();
        let mut sets: Vec<PointSet> = Vec::new();
        let mut index: HashSet<PointSet> = HashSet::new();
        let push = |sets: &mut Vec<PointSet>, index: &mut HashSet<PointSet>, s: PointSet| {
            if index.insert(s.clone()) {
                sets.push(s);
            }
        };
        push(&mut sets, &mut index, PointSet::empty(n));
        push(&mut sets, &mut index, PointSet::full(n));
        for s in &self.subbasis {
            push(&mut sets, &mut index, s.clone());
        }
        let mut i = 0;
        while i < sets.len() {
            for j in 0..i {
                let a = sets[i].clone();
                let b = sets[j].clone();
                push(&mut sets, &mut index, a.union(&b));
                push(&mut sets, &mut index, a.intersect(&b));
                if sets.len() > cap {
                    return Err(TopologyError::ClosedFamilyCap { cap });
                }
            }
            i += 1;
        }
        Ok(ClosedFamily { sets, index })
    }

    /// First pair of distinct points with identical closures, in index
    /// order. `None` means the space distinguishes its points.
    pub fn t0_failure(&self) -> Option<(usize, usize)> {
        let closures: Vec<PointSet> = (0..self.points()).map(|p| self.point_closure(p)).collect();
        for p in 0..self.points() {
            for q in p + 1..self.points() {
                if closures[p] == closures[q] {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// First point of `subset` whose closure meets `subset` beyond itself.
    /// `None` means the subspace is T1.
    pub fn t1_failure_in(&self, subset: &PointSet) -> Option<usize> {
        subset.iter().find(|&p| {
            self.point_closure(p).intersect(subset) != PointSet::singleton(self.points(), p)
        })
    }

    pub fn render_point(&self, p: usize) -> String {
        self.lattice.render(p)
    }

    /// Renders a set of points as the set of their ideals.
    pub fn render_point_set(&self, set: &PointSet) -> String {
        let mut s = String::from("{");
        for (k, p) in set.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&self.lattice.render(p));
        }
        s.push('}');
        s
    }
}

/// A closed family in deterministic insertion order with a membership index.
#[derive(Debug)]
pub struct ClosedFamily {
    sets: Vec<PointSet>,
    index: HashSet<PointSet>,
}

impl ClosedFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &PointSet) -> bool {
        self.index.contains(set)
    }

    /// Members in generation order.
    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    /// Members sorted by size then content.
    pub fn sorted(&self) -> Vec<&PointSet> {
        let mut v: Vec<&PointSet> = self.sets.iter().collect();
        v.sort_by_key(|s| (s.len(), s.blocks.clone()));
        v
    }

    /// Least member containing `target`; the family is intersection-closed,
    /// so the fold is itself a member.
    pub fn min_enclosing(&self, target: &PointSet) -> PointSet {
        let mut acc: Option<PointSet> = None;
        for s in &self.sets {
            if target.is_subset(s) {
                acc = Some(match acc {
                    None => s.clone(),
                    Some(a) => a.intersect(s),
                });
            }
        }
        acc.expect("the whole space encloses every target")
    }
}

/// Two proper closed traces covering `set`, if any. `None` means `set` is
/// irreducible in the family.
pub fn reducible_split(family: &ClosedFamily, set: &PointSet) -> Option<(PointSet, PointSet)> {
    let traces: BTreeSet<PointSet> = family
        .sets()
        .iter()
        .map(|c| c.intersect(set))
        .filter(|t| t != set)
        .collect();
    for a in &traces {
        for b in &traces {
            if a.union(b) == *set {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Points of `set` whose closure is exactly `set`, ascending.
pub fn generic_points(space: &SubtractiveSpace, set: &PointSet) -> Vec<usize> {
    set.iter().filter(|&p| space.point_closure(p) == *set).collect()
}

/// The point map induced by a homomorphism: each ideal of the map's target
/// semiring is sent to its preimage ideal. `domain` must be the space over
/// the target's ideals and `codomain` the space over the source's, under one
/// shared semantics.
#[derive(Debug)]
pub struct InducedMap {
    map: Vec<usize>,
}

impl InducedMap {
    pub fn apply(&self, p: usize) -> usize {
        self.map[p]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

pub fn induced_point_map(
    hom: &Homomorphism,
    domain: &SubtractiveSpace,
    codomain: &SubtractiveSpace,
) -> Result<InducedMap, TopologyError> {
    if domain.semantics() != codomain.semantics() {
        return Err(TopologyError::SpaceMismatch("semantics differ".into()));
    }
    if domain.lattice().semiring() != hom.target() {
        return Err(TopologyError::SpaceMismatch(
            "domain space is not over the map target's ideals".into(),
        ));
    }
    if codomain.lattice().semiring() != hom.source() {
        return Err(TopologyError::SpaceMismatch(
            "codomain space is not over the map source's ideals".into(),
        ));
    }
    let mut map = Vec::with_capacity(domain.points());
    for j in 0..domain.points() {
        let pre = hom.preimage(domain.lattice().ideal(j).members());
        let idx = codomain.lattice().index_of(pre).ok_or_else(|| {
            TopologyError::PreimageNotIdeal { set: hom.source().render_subset(pre) }
        })?;
        map.push(idx);
    }
    Ok(InducedMap { map })
}

/// First closed set of the codomain whose pullback is not closed in the
/// domain, with that pullback. `None` means the induced map is continuous.
pub fn continuity_failure(
    im: &InducedMap,
    domain_points: usize,
    domain_family: &ClosedFamily,
    codomain_family: &ClosedFamily,
) -> Option<(PointSet, PointSet)> {
    for c in codomain_family.sorted() {
        let pull = PointSet::from_points(
            domain_points,
            (0..domain_points).filter(|&j| c.contains(im.apply(j))),
        );
        if !domain_family.contains(&pull) {
            return Some((c.clone(), pull));
        }
    }
    None
}

/// Continuity checked against the codomain subbasis only.
pub fn subbasic_continuity_failure(
    im: &InducedMap,
    domain_points: usize,
    domain_family: &ClosedFamily,
    codomain: &SubtractiveSpace,
) -> Option<(PointSet, PointSet)> {
    for c in codomain.subbasis() {
        let pull = PointSet::from_points(
            domain_points,
            (0..domain_points).filter(|&j| c.contains(im.apply(j))),
        );
        if !domain_family.contains(&pull) {
            return Some((c.clone(), pull));
        }
    }
    None
}

/// How an induced map restricted to subtractive points compares against a
/// subspace homeomorphism. Every field is a failure witness; all `None`
/// means the restriction is a homeomorphism.
#[derive(Debug, Default)]
pub struct SubspaceComparison {
    /// Subtractive domain point whose image is not subtractive.
    pub into_subtractive: Option<usize>,
    /// Two subtractive domain points with one image.
    pub injective: Option<(usize, usize)>,
    /// Subtractive codomain point never hit.
    pub surjective: Option<usize>,
    /// Codomain trace whose pullback is not a domain trace.
    pub continuous: Option<PointSet>,
    /// Domain trace whose image is not a codomain trace.
    pub closed: Option<PointSet>,
}

impl SubspaceComparison {
    pub fn is_homeomorphism(&self) -> bool {
        self.into_subtractive.is_none()
            && self.injective.is_none()
            && self.surjective.is_none()
            && self.continuous.is_none()
            && self.closed.is_none()
    }
}

/// Compares the induced map restricted to subtractive points against the
/// subspace topologies on both sides.
pub fn subtractive_subspace_comparison(
    im: &InducedMap,
    domain: &SubtractiveSpace,
    domain_family: &ClosedFamily,
    codomain: &SubtractiveSpace,
    codomain_family: &ClosedFamily,
) -> SubspaceComparison {
    let dom_pts = domain.subtractive_points();
    let cod_pts = codomain.subtractive_points();

    let into_subtractive = dom_pts.iter().find(|&p| !cod_pts.contains(im.apply(p)));
    let mut injective = None;
    'inj: for p in dom_pts.iter() {
        for q in dom_pts.iter() {
            if p < q && im.apply(p) == im.apply(q) {
                injective = Some((p, q));
                break 'inj;
            }
        }
    }
    let image = PointSet::from_points(codomain.points(), dom_pts.iter().map(|p| im.apply(p)));
    let surjective = cod_pts.iter().find(|&c| !image.contains(c));

    let dom_traces: BTreeSet<PointSet> =
        domain_family.sets().iter().map(|c| c.intersect(&dom_pts)).collect();
    let cod_traces: BTreeSet<PointSet> =
        codomain_family.sets().iter().map(|c| c.intersect(&cod_pts)).collect();
    let continuous = cod_traces
        .iter()
        .find(|t| {
            let pull = PointSet::from_points(
                domain.points(),
                dom_pts.iter().filter(|&p| t.contains(im.apply(p))),
            );
            !dom_traces.contains(&pull)
        })
        .cloned();
    let closed = dom_traces
        .iter()
        .find(|t| {
            let img =
                PointSet::from_points(codomain.points(), t.iter().map(|p| im.apply(p)));
            !cod_traces.contains(&img)
        })
        .cloned();
    SubspaceComparison { into_subtractive, injective, surjective, continuous, closed }
}

/// Full subspace comparison behind a surjectivity gate.
pub fn homeomorphism_on_subtractive(
    hom: &Homomorphism,
    im: &InducedMap,
    domain: &SubtractiveSpace,
    domain_family: &ClosedFamily,
    codomain: &SubtractiveSpace,
    codomain_family: &ClosedFamily,
) -> Result<SubspaceComparison, TopologyError> {
    if !hom.is_surjective() {
        return Err(TopologyError::NotSurjective);
    }
    Ok(subtractive_subspace_comparison(im, domain, domain_family, codomain, codomain_family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::semiring::{self, FiniteSemiring};

    const CAP: usize = 100_000;

    fn space(s: FiniteSemiring, sem: Semantics) -> SubtractiveSpace {
        let lattice = Arc::new(enumerate_ideals(&Arc::new(s)).unwrap());
        SubtractiveSpace::build(lattice, sem)
    }

    fn pts(n: usize, list: &[usize]) -> PointSet {
        PointSet::from_points(n, list.iter().copied())
    }

    #[test]
    fn point_set_basics() {
        let mut a = PointSet::empty(70);
        a.insert(0);
        a.insert(65);
        assert!(a.contains(65) && !a.contains(64));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 65]);
        let b = PointSet::full(70);
        assert!(a.is_subset(&b) && !b.is_subset(&a));
        assert_eq!(a.union(&b), b);
        assert_eq!(a.intersect(&b), a);
    }

    #[test]
    fn truncated_nat_downset_space() {
        let sp = space(semiring::truncated_nat(2).unwrap(), Semantics::DownSet);
        // Ideals in order: {0}, {0,T}, whole. Closures of the last two are
        // the whole semiring, so both name the full point set.
        assert_eq!(sp.subbasis(), &[pts(3, &[0]), pts(3, &[0, 1, 2])]);
        assert_eq!(sp.point_closure(0), pts(3, &[0]));
        assert_eq!(sp.point_closure(1), pts(3, &[0, 1, 2]));
        assert_eq!(sp.point_closure(2), pts(3, &[0, 1, 2]));
        assert_eq!(sp.t0_failure(), Some((1, 2)));
        let fam = sp.closed_family(CAP).unwrap();
        assert_eq!(fam.len(), 3);
    }

    #[test]
    fn truncated_nat_fixedpoint_space() {
        let sp = space(semiring::truncated_nat(2).unwrap(), Semantics::FixedPoint);
        assert_eq!(sp.subbasis(), &[pts(3, &[0]), pts(3, &[2])]);
        assert_eq!(sp.point_closure(1), pts(3, &[0, 1, 2]));
        assert_eq!(sp.t0_failure(), None);
        let fam = sp.closed_family(CAP).unwrap();
        assert_eq!(fam.len(), 5);
        assert!(fam.contains(&pts(3, &[0, 2])));

        // The whole space is irreducible with the middle ideal as its only
        // generic point; the two-point closed set splits.
        assert!(reducible_split(&fam, &pts(3, &[0, 1, 2])).is_none());
        assert_eq!(generic_points(&sp, &pts(3, &[0, 1, 2])), vec![1]);
        let (a, b) = reducible_split(&fam, &pts(3, &[0, 2])).unwrap();
        assert_eq!(a.union(&b), pts(3, &[0, 2]));
        assert_ne!(a, pts(3, &[0, 2]));
        assert_ne!(b, pts(3, &[0, 2]));
    }

    #[test]
    fn boolean_families_differ_by_semantics() {
        let down = space(semiring::boolean(), Semantics::DownSet);
        assert_eq!(down.closed_family(CAP).unwrap().len(), 3);
        // Under the fixed-point reading the whole semiring names its own
        // singleton, so four closed sets arise.
        let fixed = space(semiring::boolean(), Semantics::FixedPoint);
        let fam = fixed.closed_family(CAP).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(fam.contains(&pts(2, &[1])));
    }

    #[test]
    fn closed_family_cap_fires() {
        let sp = space(semiring::chain_minplus(4).unwrap(), Semantics::FixedPoint);
        assert!(matches!(
            sp.closed_family(3),
            Err(TopologyError::ClosedFamilyCap { cap: 3 })
        ));
        // All four ideals are subtractive; singletons generate every subset.
        assert_eq!(sp.closed_family(CAP).unwrap().len(), 16);
    }

    #[test]
    fn point_closure_is_the_least_enclosing_closed_set() {
        for s in [
            semiring::boolean(),
            semiring::zmod(4).unwrap(),
            semiring::truncated_nat(2).unwrap(),
            semiring::truncated_nat(3).unwrap(),
            semiring::chain_minplus(4).unwrap(),
        ] {
            for sem in Semantics::BOTH {
                let sp = space(s.clone(), sem);
                let fam = sp.closed_family(CAP).unwrap();
                for p in 0..sp.points() {
                    let single = PointSet::singleton(sp.points(), p);
                    assert_eq!(
                        sp.point_closure(p),
                        fam.min_enclosing(&single),
                        "structure {} sem {sem} point {p}",
                        s.name()
                    );
                }
            }
        }
    }

    #[test]
    fn t1_on_the_subtractive_subspace() {
        let fixed = space(semiring::truncated_nat(2).unwrap(), Semantics::FixedPoint);
        assert_eq!(fixed.t1_failure_in(&fixed.subtractive_points()), None);
        let down = space(semiring::truncated_nat(2).unwrap(), Semantics::DownSet);
        // The whole semiring is a subtractive point whose closure swallows
        // the zero ideal.
        assert_eq!(down.t1_failure_in(&down.subtractive_points()), Some(2));
    }

    #[test]
    fn minplus_fixedpoint_is_discrete_on_points() {
        let sp = space(semiring::chain_minplus(4).unwrap(), Semantics::FixedPoint);
        for p in 0..sp.points() {
            assert_eq!(sp.point_closure(p), PointSet::singleton(sp.points(), p));
        }
        assert_eq!(sp.t0_failure(), None);
        assert_eq!(sp.t1_failure_in(&PointSet::full(sp.points())), None);
    }

    fn truncation_map() -> (Arc<FiniteSemiring>, Arc<FiniteSemiring>, Homomorphism) {
        let s4 = Arc::new(semiring::truncated_nat(3).unwrap());
        let s3 = Arc::new(semiring::truncated_nat(2).unwrap());
        let h = Homomorphism::new(Arc::clone(&s4), Arc::clone(&s3), vec![0, 1, 2, 2]).unwrap();
        (s4, s3, h)
    }

    #[test]
    fn induced_map_of_the_truncation_collapse() {
        let (s4, s3, h) = truncation_map();
        for sem in Semantics::BOTH {
            let domain = SubtractiveSpace::build(
                Arc::new(enumerate_ideals(&s3).unwrap()),
                sem,
            );
            let codomain = SubtractiveSpace::build(
                Arc::new(enumerate_ideals(&s4).unwrap()),
                sem,
            );
            let im = induced_point_map(&h, &domain, &codomain).unwrap();
            // {0} pulls back to {0}; {0,T} to {0,2,T}; the whole to the whole.
            assert_eq!(im.map(), &[0, 2, 3]);

            let dfam = domain.closed_family(CAP).unwrap();
            let cfam = codomain.closed_family(CAP).unwrap();
            assert_eq!(continuity_failure(&im, domain.points(), &dfam, &cfam), None);
            assert_eq!(
                subbasic_continuity_failure(&im, domain.points(), &dfam, &codomain),
                None
            );
            let cmp = homeomorphism_on_subtractive(&h, &im, &domain, &dfam, &codomain, &cfam)
                .unwrap();
            assert!(cmp.is_homeomorphism(), "sem {sem}: {cmp:?}");
        }
    }

    #[test]
    fn induced_map_rejects_mismatched_spaces() {
        let (s4, s3, h) = truncation_map();
        let wrong = SubtractiveSpace::build(
            Arc::new(enumerate_ideals(&s4).unwrap()),
            Semantics::DownSet,
        );
        let also_wrong = SubtractiveSpace::build(
            Arc::new(enumerate_ideals(&s3).unwrap()),
            Semantics::DownSet,
        );
        // Domain and codomain are swapped here.
        assert!(matches!(
            induced_point_map(&h, &wrong, &also_wrong),
            Err(TopologyError::SpaceMismatch(_))
        ));
    }

    #[test]
    fn identity_map_is_a_subspace_homeomorphism() {
        let b = Arc::new(semiring::boolean());
        let id = Homomorphism::new(Arc::clone(&b), Arc::clone(&b), vec![0, 1]).unwrap();
        for sem in Semantics::BOTH {
            let sp = SubtractiveSpace::build(Arc::new(enumerate_ideals(&b).unwrap()), sem);
            let sp2 = SubtractiveSpace::build(Arc::new(enumerate_ideals(&b).unwrap()), sem);
            let im = induced_point_map(&id, &sp, &sp2).unwrap();
            let fam = sp.closed_family(CAP).unwrap();
            let fam2 = sp2.closed_family(CAP).unwrap();
            let cmp = subtractive_subspace_comparison(&im, &sp, &fam, &sp2, &fam2);
            assert!(cmp.is_homeomorphism());
        }
    }

    #[test]
    fn render_point_set_uses_ideal_notation() {
        let sp = space(semiring::truncated_nat(2).unwrap(), Semantics::DownSet);
        assert_eq!(sp.render_point_set(&pts(3, &[0, 1])), "{{0},{0,T}}");
    }
}
