//! Ideals of a finite commutative semiring: generation, exhaustive
//! enumeration, the subtractive closure operator, and lattice-level checks.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::semiring::{ElemSet, FiniteSemiring};

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("set {set} is not an ideal: {reason}")]
    NotAnIdeal { set: String, reason: String },
    #[error("ideals belong to different semirings")]
    ParentMismatch,
    #[error("empty ideal family")]
    EmptyFamily,
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("ideal count exceeds the enumeration cap {cap}")]
    IdealCap { cap: usize },
}

/// Caps for exhaustive ideal enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationCaps {
    pub max_order: usize,
    pub max_ideals: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_order: 8, max_ideals: 4096 }
    }
}

/// An ideal: an additive submonoid that absorbs multiplication by every
/// semiring element.
#[derive(Clone, Debug)]
pub struct Ideal {
    parent: Arc<FiniteSemiring>,
    members: ElemSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Eq for Ideal {}

fn ideal_defect(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    if !set.contains(s.zero()) {
        return Some("missing zero".into());
    }
    for x in set.iter() {
        for y in set.iter() {
            if !set.contains(s.add(x, y)) {
                return Some(format!(
                    "not closed under addition at ({},{})",
                    s.label(x),
                    s.label(y)
                ));
            }
        }
        for r in 0..s.order() {
            if !set.contains(s.mul(r, x)) {
                return Some(format!(
                    "does not absorb {} * {}",
                    s.label(r),
                    s.label(x)
                ));
            }
        }
    }
    None
}

impl Ideal {
    /// Wraps a member set after checking the ideal laws.
    pub fn new(parent: Arc<FiniteSemiring>, members: ElemSet) -> Result<Ideal, IdealError> {
        if let Some(reason) = ideal_defect(&parent, members) {
            return Err(IdealError::NotAnIdeal { set: parent.render_subset(members), reason });
        }
        Ok(Ideal { parent, members })
    }

    pub fn zero_ideal(parent: Arc<FiniteSemiring>) -> Ideal {
        let members = ElemSet::singleton(parent.zero());
        Ideal { parent, members }
    }

    pub fn whole(parent: Arc<FiniteSemiring>) -> Ideal {
        let members = parent.full_set();
        Ideal { parent, members }
    }

    pub fn parent(&self) -> &Arc<FiniteSemiring> {
        &self.parent
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn render(&self) -> String {
        self.parent.render_subset(self.members)
    }

    fn check_parent(&self, other: &Ideal) -> Result<(), IdealError> {
        if self.parent == other.parent { Ok(()) } else { Err(IdealError::ParentMismatch) }
    }

    /// Member set of the subtractive closure: every r for which some member x
    /// has r + x again a member.
    pub fn closure_set(&self) -> ElemSet {
        let s = self.parent.as_ref();
        let m = self.members;
        ElemSet::from_indices(
            (0..s.order()).filter(|&r| m.iter().any(|x| m.contains(s.add(r, x)))),
        )
    }

    /// Least subtractive ideal containing this one.
    pub fn subtractive_closure(&self) -> Ideal {
        Ideal::new(Arc::clone(&self.parent), self.closure_set())
            .expect("subtractive closure of an ideal is an ideal")
    }

    /// First (x, y) with x and x + y members but y outside, in index order.
    pub fn subtractive_failure(&self) -> Option<(usize, usize)> {
        let s = self.parent.as_ref();
        for x in self.members.iter() {
            for y in 0..s.order() {
                if !self.members.contains(y) && self.members.contains(s.add(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Whether the ideal already equals its subtractive closure.
    pub fn is_subtractive(&self) -> bool {
        let fixed = self.closure_set() == self.members;
        debug_assert_eq!(fixed, self.subtractive_failure().is_none());
        fixed
    }

    /// Smallest ideal containing both, generated from the member union.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_parent(other)?;
        Ok(generate_ideal(&self.parent, self.members.union(other.members)))
    }

    /// Smallest ideal containing all pairwise member products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_parent(other)?;
        let s = self.parent.as_ref();
        let mut seed = ElemSet::EMPTY;
        for x in self.members.iter() {
            for y in other.members.iter() {
                seed.insert(s.mul(x, y));
            }
        }
        Ok(generate_ideal(&self.parent, seed))
    }

    /// Elements with some positive power inside the ideal.
    pub fn radical(&self) -> Ideal {
        let s = self.parent.as_ref();
        let mut root = ElemSet::EMPTY;
        for x in 0..s.order() {
            let mut seen = ElemSet::EMPTY;
            let mut p = x;
            loop {
                if self.members.contains(p) {
                    root.insert(x);
                    break;
                }
                if seen.contains(p) {
                    break;
                }
                seen.insert(p);
                p = s.mul(p, x);
            }
        }
        Ideal::new(Arc::clone(&self.parent), root)
            .expect("radical of an ideal is an ideal")
    }
}

/// Intersection of a nonempty family over one semiring.
pub fn intersection_of(family: &[Ideal]) -> Result<Ideal, IdealError> {
    let first = family.first().ok_or(IdealError::EmptyFamily)?;
    let mut members = first.members();
    for ideal in &family[1..] {
        first.check_parent(ideal)?;
        members = members.intersect(ideal.members());
    }
    Ok(Ideal { parent: Arc::clone(first.parent()), members })
}

/// Least ideal containing `seed`: fixpoint closure under addition and
/// multiplication by arbitrary elements.
pub fn generate_ideal(parent: &Arc<FiniteSemiring>, seed: ElemSet) -> Ideal {
    let s = parent.as_ref();
    let mut m = seed;
    m.insert(s.zero());
    loop {
        let mut grown = m;
        for x in m.iter() {
            for y in m.iter() {
                grown.insert(s.add(x, y));
            }
            for r in 0..s.order() {
                grown.insert(s.mul(r, x));
            }
        }
        if grown == m {
            break;
        }
        m = grown;
    }
    debug_assert!(ideal_defect(s, m).is_none());
    Ideal { parent: Arc::clone(parent), members: m }
}

/// Every ideal, found as a power-set filter. Exponential; test oracle for
/// small orders only.
pub fn ideals_by_brute_force(s: &FiniteSemiring) -> Vec<ElemSet> {
    assert!(s.order() <= 20, "brute-force ideal scan is limited to tiny orders");
    let n = s.order();
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let set = ElemSet::from_indices((0..n).filter(|&i| mask >> i & 1 == 1));
        if ideal_defect(s, set).is_none() {
            out.push(set);
        }
    }
    out.sort_by_key(|m| (m.len(), m.bits()));
    out
}

/// All ideals of one semiring, sorted by size then member mask, together with
/// precomputed subtractivity flags and closure indices.
#[derive(Debug)]
pub struct IdealLattice {
    semiring: Arc<FiniteSemiring>,
    ideals: Vec<Ideal>,
    subtractive: Vec<bool>,
    closure_of: Vec<usize>,
    index: HashMap<u64, usize>,
}

impl IdealLattice {
    pub fn semiring(&self) -> &Arc<FiniteSemiring> {
        &self.semiring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn is_subtractive(&self, i: usize) -> bool {
        self.subtractive[i]
    }

    /// Index of the subtractive closure of ideal `i`.
    pub fn closure_of(&self, i: usize) -> usize {
        self.closure_of[i]
    }

    pub fn index_of(&self, members: ElemSet) -> Option<usize> {
        self.index.get(&members.bits()).copied()
    }

    pub fn subtractive_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.subtractive[i]).collect()
    }

    pub fn render(&self, i: usize) -> String {
        self.ideals[i].render()
    }
}

pub fn enumerate_ideals(parent: &Arc<FiniteSemiring>) -> Result<IdealLattice, IdealError> {
    enumerate_ideals_with(parent, EnumerationCaps::default())
}

/// Exhaustive enumeration: principal ideals closed under pairwise join.
pub fn enumerate_ideals_with(
    parent: &Arc<FiniteSemiring>,
    caps: EnumerationCaps,
) -> Result<IdealLattice, IdealError> {
    let s = parent.as_ref();
    let n = s.order();
    if n > caps.max_order {
        return Err(IdealError::OrderCap { order: n, cap: caps.max_order });
    }

    let mut found: BTreeSet<u64> = BTreeSet::new();
    found.insert(ElemSet::singleton(s.zero()).bits());
    for e in 0..n {
        found.insert(generate_ideal(parent, ElemSet::singleton(e)).members().bits());
    }
    loop {
        let snapshot: Vec<u64> = found.iter().copied().collect();
        let before = found.len();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i + 1..] {
                let join = generate_ideal(parent, ElemSet::from_indices(
                    (0..n).filter(|&k| (a | b) >> k & 1 == 1),
                ));
                found.insert(join.members().bits());
                if found.len() > caps.max_ideals {
                    return Err(IdealError::IdealCap { cap: caps.max_ideals });
                }
            }
        }
        if found.len() == before {
            break;
        }
    }

    let mut masks: Vec<u64> = found.into_iter().collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let ideals: Vec<Ideal> = masks
        .iter()
        .map(|&m| Ideal {
            parent: Arc::clone(parent),
            members: ElemSet::from_indices((0..n).filter(|&k| m >> k & 1 == 1)),
        })
        .collect();
    let index: HashMap<u64, usize> =
        masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let subtractive: Vec<bool> = ideals.iter().map(Ideal::is_subtractive).collect();
    let closure_of: Vec<usize> = ideals
        .iter()
        .map(|i| {
            index
                .get(&i.closure_set().bits())
                .copied()
                .expect("closure of an enumerated ideal is an enumerated ideal")
        })
        .collect();

    Ok(IdealLattice { semiring: Arc::clone(parent), ideals, subtractive, closure_of, index })
}

/// One side of a broken closure/inclusion adjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisFailure {
    /// Lattice index of the ideal being closed.
    pub ideal: usize,
    /// Lattice index of the subtractive ideal compared against.
    pub other: usize,
    /// Whether the closure sits inside `other`.
    pub closure_below: bool,
    /// Whether the ideal itself sits inside `other`.
    pub ideal_below: bool,
}

/// Checks that closure inclusion into a subtractive ideal is equivalent to
/// plain inclusion, over all pairs. `None` means the adjunction holds.
pub fn galois_failure(lat: &IdealLattice) -> Option<GaloisFailure> {
    for i in 0..lat.len() {
        let closure = lat.ideal(lat.closure_of(i)).members();
        let plain = lat.ideal(i).members();
        for k in lat.subtractive_indices() {
            let target = lat.ideal(k).members();
            let closure_below = closure.is_subset(target);
            let ideal_below = plain.is_subset(target);
            if closure_below != ideal_below {
                return Some(GaloisFailure { ideal: i, other: k, closure_below, ideal_below });
            }
        }
    }
    None
}

/// A triple breaking the modular law, with both sides evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularityFailure {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// Tests the modular law over the full ideal lattice (join = sum) or over
/// the subtractive ideals (join = closure of sum). `None` means modular.
pub fn modularity_failure(lat: &IdealLattice, subtractive_only: bool) -> Option<ModularityFailure> {
    let indices: Vec<usize> =
        if subtractive_only { lat.subtractive_indices() } else { (0..lat.len()).collect() };
    let meet = |x: usize, y: usize| -> usize {
        lat.index_of(lat.ideal(x).members().intersect(lat.ideal(y).members()))
            .expect("intersection of enumerated ideals is enumerated")
    };
    let join = |x: usize, y: usize| -> usize {
        let sum = lat.ideal(x).sum(lat.ideal(y)).expect("same parent");
        let si = lat.index_of(sum.members()).expect("sum of enumerated ideals is enumerated");
        if subtractive_only { lat.closure_of(si) } else { si }
    };
    for &a in &indices {
        for &b in &indices {
            for &c in &indices {
                if !lat.ideal(a).members().is_subset(lat.ideal(c).members()) {
                    continue;
                }
                let lhs = join(a, meet(b, c));
                let rhs = meet(join(a, b), c);
                if lhs != rhs {
                    return Some(ModularityFailure { a, b, c, lhs, rhs });
                }
            }
        }
    }
    None
}
