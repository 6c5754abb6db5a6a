//! Executable claim registry and the deterministic verification suite.
//!
//! Each claim quantifies over everything in scope: all ideals of a
//! structure, all homomorphisms of a pair, or the pinned family of ideals of
//! the naturals. Claims marked `must_hold` drive the failure exit code;
//! the rest are verified-or-refuted and only the report carries their
//! verdict. Claims X1..X4 cross-check one computation route against an
//! independent one and always must hold.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::ideal::{
    EnumerationCaps, Ideal, IdealError, IdealLattice, enumerate_ideals_with, galois_failure,
    ideals_by_brute_force, intersection_of, modularity_failure,
};
use crate::nat::{NatIdeal, nat_ideal};
use crate::semiring::{FiniteSemiring, Homomorphism, enumerate_homomorphisms};
use crate::topology::{
    ClosedFamily, PointSet, Semantics, SubtractiveSpace, TopologyError, continuity_failure,
    generic_points, induced_point_map, reducible_split, subbasic_continuity_failure,
    subtractive_subspace_comparison,
};

/// What a claim ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// One finite structure and its ideals.
    Structure,
    /// One homomorphism between two corpus structures.
    Homomorphism,
    /// The pinned family of ideals of the naturals.
    Nat,
}

#[derive(Clone, Copy, Debug)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    /// Also evaluated over the pinned ideals of the naturals.
    pub on_nat: bool,
    pub semantics_dependent: bool,
    /// A failure flips the process exit code, not just the report.
    pub must_hold: bool,
}

const REGISTRY: &[Claim] = &[
    Claim {
        id: "C1.1",
        statement: "every ideal sits inside its subtractive closure",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.2",
        statement: "the zero ideal is its own subtractive closure",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.3",
        statement: "the whole structure is its own subtractive closure",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.4",
        statement: "the subtractive closure is idempotent",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.5",
        statement: "the subtractive closure is monotone over inclusion",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.6",
        statement: "the closure of a sum contains the union of the closures",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.7",
        statement: "closure commutes with intersections of ideal families",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.8",
        statement: "the closure is the least subtractive ideal containing its ideal",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C1.9",
        statement: "an ideal is subtractive exactly when it equals its closure",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C2",
        statement: "closure below a subtractive ideal is equivalent to inclusion below it",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C3",
        statement: "products of subtractive ideals are subtractive and sit inside the intersection",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: false,
    },
    Claim {
        id: "C4",
        statement: "intersections of subtractive ideal families are subtractive",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C5",
        statement: "the sum of the ideals of even and triple naturals misses exactly 1 and is not subtractive",
        scope: Scope::Nat,
        on_nat: true,
        semantics_dependent: false,
        must_hold: false,
    },
    Claim {
        id: "C6",
        statement: "the subtractive ideals form a modular lattice under intersection and closed sum",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: false,
        must_hold: false,
    },
    Claim {
        id: "C7",
        statement: "the closure of an ideal sits inside the closure of its radical",
        scope: Scope::Structure,
        on_nat: true,
        semantics_dependent: false,
        must_hold: false,
    },
    Claim {
        id: "C8",
        statement: "subbasic closed sets correspond one-to-one with subtractive ideals",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "C9",
        statement: "distinct points have distinct closures",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "C10",
        statement: "the subtractive points form a maximal T1 subspace",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "C11",
        statement: "every nonempty subbasic closed set is irreducible",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "C12",
        statement: "every nonempty irreducible closed set has exactly one generic point",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "C13",
        statement: "preimages of subtractive ideals, kernels included, are subtractive",
        scope: Scope::Homomorphism,
        on_nat: false,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "C14",
        statement: "the induced point map is continuous for the closed families",
        scope: Scope::Homomorphism,
        on_nat: false,
        semantics_dependent: true,
        must_hold: true,
    },
    Claim {
        id: "C15",
        statement: "surjections induce homeomorphisms between the subtractive point subspaces",
        scope: Scope::Homomorphism,
        on_nat: false,
        semantics_dependent: true,
        must_hold: false,
    },
    Claim {
        id: "X1",
        statement: "ideal enumeration agrees with the power-set filter",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: false,
        must_hold: true,
    },
    Claim {
        id: "X2",
        statement: "point closures equal the least enclosing member of the closed family",
        scope: Scope::Structure,
        on_nat: false,
        semantics_dependent: true,
        must_hold: true,
    },
    Claim {
        id: "X3",
        statement: "subbasic continuity agrees with full-family continuity",
        scope: Scope::Homomorphism,
        on_nat: false,
        semantics_dependent: true,
        must_hold: true,
    },
    Claim {
        id: "X4",
        statement: "homomorphism preimages of ideals are enumerated ideals",
        scope: Scope::Homomorphism,
        on_nat: false,
        semantics_dependent: false,
        must_hold: true,
    },
];

pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// A resource cap prevented evaluation.
    Cap,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Cap => "cap",
        })
    }
}

/// One evaluated (claim, structure, semantics) cell.
#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub claim_id: &'static str,
    pub structure: String,
    pub semantics: Option<Semantics>,
    pub outcome: Outcome,
    pub witness: Option<String>,
    pub must_hold: bool,
    pub elapsed: Duration,
}

impl ClaimReport {
    /// One machine-readable line:
    /// `CLAIM <id> STRUCT <name> SEM <downset|fixedpoint|na> RESULT <holds|fails|cap> [WITNESS <text>]`
    pub fn line(&self) -> String {
        let sem = match self.semantics {
            Some(s) => s.to_string(),
            None => "na".to_string(),
        };
        let mut line = format!(
            "CLAIM {} STRUCT {} SEM {} RESULT {}",
            self.claim_id, self.structure, sem, self.outcome
        );
        if let Some(w) = &self.witness {
            line.push_str(" WITNESS ");
            line.push_str(w);
        }
        line
    }
}

/// Caps shared by every evaluation in one suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteCaps {
    pub enumeration: EnumerationCaps,
    pub max_closed: usize,
}

impl Default for SuiteCaps {
    fn default() -> Self {
        SuiteCaps { enumeration: EnumerationCaps::default(), max_closed: 100_000 }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub semantics: Vec<Semantics>,
    /// Claim ids to run; `None` runs every registered claim.
    pub claim_filter: Option<BTreeSet<String>>,
    pub caps: SuiteCaps,
    /// Evaluate nat-scoped and nat-applicable claims over the pinned family.
    pub include_nat: bool,
    /// Extra ideals of the naturals added to the pinned family.
    pub nat_extras: Vec<NatIdeal>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            semantics: Semantics::BOTH.to_vec(),
            claim_filter: None,
            caps: SuiteCaps::default(),
            include_nat: true,
            nat_extras: Vec::new(),
        }
    }
}

/// One corpus structure with everything claims need, built once.
pub struct StructureCtx {
    pub semiring: Arc<FiniteSemiring>,
    pub lattice: Result<Arc<IdealLattice>, IdealError>,
    spaces: Vec<(Semantics, SpaceCtx)>,
}

pub struct SpaceCtx {
    pub space: SubtractiveSpace,
    pub family: Result<ClosedFamily, TopologyError>,
}

impl StructureCtx {
    pub fn build(
        semiring: Arc<FiniteSemiring>,
        semantics: &[Semantics],
        caps: &SuiteCaps,
    ) -> StructureCtx {
        let lattice = enumerate_ideals_with(&semiring, caps.enumeration).map(Arc::new);
        let mut spaces = Vec::new();
        if let Ok(lat) = &lattice {
            for &sem in semantics {
                let space = SubtractiveSpace::build(Arc::clone(lat), sem);
                let family = space.closed_family(caps.max_closed);
                spaces.push((sem, SpaceCtx { space, family }));
            }
        }
        StructureCtx { semiring, lattice, spaces }
    }

    pub fn space(&self, sem: Semantics) -> Option<&SpaceCtx> {
        self.spaces.iter().find(|(s, _)| *s == sem).map(|(_, ctx)| ctx)
    }

    pub fn name(&self) -> &str {
        self.semiring.name()
    }
}

/// The pinned ideals of the naturals that nat-applicable claims range over.
pub struct NatContext {
    items: Vec<(String, NatIdeal)>,
}

impl NatContext {
    /// `<2>`, `<3>`, `<2,3>`, `<4,6>`, and the zero ideal.
    pub fn standard() -> NatContext {
        NatContext::with_extras(&[])
    }

    pub fn with_extras(extras: &[NatIdeal]) -> NatContext {
        let mut items: Vec<NatIdeal> = [
            nat_ideal(&[2]),
            nat_ideal(&[3]),
            nat_ideal(&[2, 3]),
            nat_ideal(&[4, 6]),
            Ok(NatIdeal::zero()),
        ]
        .into_iter()
        .map(|i| i.expect("pinned family is tiny"))
        .collect();
        for e in extras {
            if !items.contains(e) {
                items.push(e.clone());
            }
        }
        let items = items.into_iter().map(|i| (short_nat(&i), i)).collect();
        NatContext { items }
    }

    pub fn items(&self) -> &[(String, NatIdeal)] {
        &self.items
    }
}

fn short_nat(i: &NatIdeal) -> String {
    let gens: Vec<String> = i.generators().iter().map(u64::to_string).collect();
    format!("<{}>", gens.join(","))
}

/// The standard corpus: every canonical structure of order at most three,
/// then the built-in families. Small enough that the full suite stays well
/// under the per-cell time budget.
pub fn default_corpus() -> Vec<Arc<FiniteSemiring>> {
    let mut corpus = Vec::new();
    for order in 1..=3 {
        let found = crate::search::search_semirings(order, true, None)
            .expect("orders up to three are always searchable");
        corpus.extend(found.semirings.into_iter().map(Arc::new));
    }
    for s in [
        crate::semiring::boolean(),
        crate::semiring::zmod(2).expect("valid modulus"),
        crate::semiring::zmod(4).expect("valid modulus"),
        crate::semiring::truncated_nat(2).expect("valid threshold"),
        crate::semiring::truncated_nat(3).expect("valid threshold"),
        crate::semiring::chain_minplus(4).expect("valid order"),
    ] {
        corpus.push(Arc::new(s));
    }
    corpus
}

type Verdict = (Outcome, Option<String>);

fn holds() -> Verdict {
    (Outcome::Holds, None)
}

fn fails(witness: String) -> Verdict {
    (Outcome::Fails, Some(witness))
}

fn capped(reason: impl fmt::Display) -> Verdict {
    (Outcome::Cap, Some(reason.to_string()))
}

/// Ascending k-subsets of 0..n.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

macro_rules! try_lattice {
    ($ctx:expr) => {
        match &$ctx.lattice {
            Ok(l) => l,
            Err(e) => return capped(e),
        }
    };
}

macro_rules! try_family {
    ($space_ctx:expr) => {
        match &$space_ctx.family {
            Ok(f) => f,
            Err(e) => return capped(e),
        }
    };
}

fn eval_structure_claim(id: &str, ctx: &StructureCtx, sem: Option<Semantics>) -> Verdict {
    match id {
        "C1.1" => {
            let lat = try_lattice!(ctx);
            for i in lat.ideals() {
                let c = i.closure_set();
                if !i.members().is_subset(c) {
                    return fails(format!("I={} C(I)={}", i.render(), ctx.semiring.render_subset(c)));
                }
            }
            holds()
        }
        "C1.2" => {
            let zero = Ideal::zero_ideal(Arc::clone(&ctx.semiring));
            if zero.closure_set() == zero.members() {
                holds()
            } else {
                fails(format!(
                    "C({})={}",
                    zero.render(),
                    ctx.semiring.render_subset(zero.closure_set())
                ))
            }
        }
        "C1.3" => {
            let whole = Ideal::whole(Arc::clone(&ctx.semiring));
            if whole.closure_set() == whole.members() {
                holds()
            } else {
                fails(format!(
                    "C(S)={}",
                    ctx.semiring.render_subset(whole.closure_set())
                ))
            }
        }
        "C1.4" => {
            let lat = try_lattice!(ctx);
            for i in 0..lat.len() {
                let once = lat.closure_of(i);
                let twice = lat.closure_of(once);
                if once != twice {
                    return fails(format!(
                        "I={} C(I)={} C(C(I))={}",
                        lat.render(i),
                        lat.render(once),
                        lat.render(twice)
                    ));
                }
            }
            holds()
        }
        "C1.5" => {
            let lat = try_lattice!(ctx);
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    if lat.ideal(i).members().is_subset(lat.ideal(j).members()) {
                        let ci = lat.ideal(lat.closure_of(i)).members();
                        let cj = lat.ideal(lat.closure_of(j)).members();
                        if !ci.is_subset(cj) {
                            return fails(format!(
                                "I={} J={} C(I)={} C(J)={}",
                                lat.render(i),
                                lat.render(j),
                                ctx.semiring.render_subset(ci),
                                ctx.semiring.render_subset(cj)
                            ));
                        }
                    }
                }
            }
            holds()
        }
        "C1.6" => {
            let lat = try_lattice!(ctx);
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let sum = lat.ideal(i).sum(lat.ideal(j)).expect("same parent");
                    let csum = sum.closure_set();
                    let union = lat
                        .ideal(lat.closure_of(i))
                        .members()
                        .union(lat.ideal(lat.closure_of(j)).members());
                    if !union.is_subset(csum) {
                        return fails(format!(
                            "I={} J={} C(I)uC(J)={} C(I+J)={}",
                            lat.render(i),
                            lat.render(j),
                            ctx.semiring.render_subset(union),
                            ctx.semiring.render_subset(csum)
                        ));
                    }
                }
            }
            holds()
        }
        "C1.7" => {
            let lat = try_lattice!(ctx);
            let mut families: Vec<Vec<usize>> = Vec::new();
            for k in 1..=3.min(lat.len()) {
                families.extend(combinations(lat.len(), k));
            }
            if lat.len() > 3 {
                families.push((0..lat.len()).collect());
            }
            for family in families {
                let ideals: Vec<Ideal> =
                    family.iter().map(|&i| lat.ideal(i).clone()).collect();
                let meet = intersection_of(&ideals).expect("nonempty same-parent family");
                let lhs = meet.closure_set();
                let mut rhs = ctx.semiring.full_set();
                for &i in &family {
                    rhs = rhs.intersect(lat.ideal(lat.closure_of(i)).members());
                }
                if lhs != rhs {
                    let names: Vec<String> = family.iter().map(|&i| lat.render(i)).collect();
                    return fails(format!(
                        "family=[{}] C(meet)={} meet(C)={}",
                        names.join(","),
                        ctx.semiring.render_subset(lhs),
                        ctx.semiring.render_subset(rhs)
                    ));
                }
            }
            holds()
        }
        "C1.8" => {
            let lat = try_lattice!(ctx);
            for i in 0..lat.len() {
                let c = lat.closure_of(i);
                if !lat.ideal(i).members().is_subset(lat.ideal(c).members()) {
                    return fails(format!("I={} C(I)={} loses members", lat.render(i), lat.render(c)));
                }
                if lat.ideal(c).subtractive_failure().is_some() {
                    return fails(format!("C({})={} is not subtractive", lat.render(i), lat.render(c)));
                }
                for k in lat.subtractive_indices() {
                    if lat.ideal(i).members().is_subset(lat.ideal(k).members())
                        && !lat.ideal(c).members().is_subset(lat.ideal(k).members())
                    {
                        return fails(format!(
                            "I={} C(I)={} exceeds subtractive K={}",
                            lat.render(i),
                            lat.render(c),
                            lat.render(k)
                        ));
                    }
                }
            }
            holds()
        }
        "C1.9" => {
            let lat = try_lattice!(ctx);
            for i in 0..lat.len() {
                let fixed = lat.closure_of(i) == i;
                let definitional = lat.ideal(i).subtractive_failure();
                if fixed != definitional.is_none() {
                    let w = match definitional {
                        Some((x, y)) => format!(
                            "I={} is a closure fixed point yet x={} y={} breaks it",
                            lat.render(i),
                            ctx.semiring.label(x),
                            ctx.semiring.label(y)
                        ),
                        None => format!(
                            "I={} has no witness yet C(I)={}",
                            lat.render(i),
                            lat.render(lat.closure_of(i))
                        ),
                    };
                    return fails(w);
                }
            }
            holds()
        }
        "C2" => {
            let lat = try_lattice!(ctx);
            match galois_failure(lat) {
                None => holds(),
                Some(g) => fails(format!(
                    "I={} K={} closure-inside={} ideal-inside={}",
                    lat.render(g.ideal),
                    lat.render(g.other),
                    g.closure_below,
                    g.ideal_below
                )),
            }
        }
        "C3" => {
            let lat = try_lattice!(ctx);
            for i in lat.subtractive_indices() {
                for j in lat.subtractive_indices() {
                    let p = lat.ideal(i).product(lat.ideal(j)).expect("same parent");
                    let both = lat.ideal(i).members().intersect(lat.ideal(j).members());
                    if !p.members().is_subset(both) {
                        return fails(format!(
                            "I={} J={} IJ={} escapes the intersection",
                            lat.render(i),
                            lat.render(j),
                            p.render()
                        ));
                    }
                    if let Some((x, y)) = p.subtractive_failure() {
                        return fails(format!(
                            "I={} J={} IJ={} not subtractive: x={} y={}",
                            lat.render(i),
                            lat.render(j),
                            p.render(),
                            ctx.semiring.label(x),
                            ctx.semiring.label(y)
                        ));
                    }
                }
            }
            holds()
        }
        "C4" => {
            let lat = try_lattice!(ctx);
            let subs = lat.subtractive_indices();
            let mut families: Vec<Vec<usize>> = Vec::new();
            for k in 1..=3.min(subs.len()) {
                for combo in combinations(subs.len(), k) {
                    families.push(combo.iter().map(|&x| subs[x]).collect());
                }
            }
            if subs.len() > 3 {
                families.push(subs.clone());
            }
            for family in families {
                let ideals: Vec<Ideal> =
                    family.iter().map(|&i| lat.ideal(i).clone()).collect();
                let meet = intersection_of(&ideals).expect("nonempty same-parent family");
                if let Some((x, y)) = meet.subtractive_failure() {
                    let names: Vec<String> = family.iter().map(|&i| lat.render(i)).collect();
                    return fails(format!(
                        "family=[{}] meet={} x={} y={}",
                        names.join(","),
                        meet.render(),
                        ctx.semiring.label(x),
                        ctx.semiring.label(y)
                    ));
                }
            }
            holds()
        }
        "C6" => {
            let lat = try_lattice!(ctx);
            match modularity_failure(lat, true) {
                None => holds(),
                Some(m) => fails(format!(
                    "a={} b={} c={} lhs={} rhs={}",
                    lat.render(m.a),
                    lat.render(m.b),
                    lat.render(m.c),
                    lat.render(m.lhs),
                    lat.render(m.rhs)
                )),
            }
        }
        "C7" => {
            let lat = try_lattice!(ctx);
            for i in lat.ideals() {
                let lhs = i.closure_set();
                let rhs = i.radical().closure_set();
                if !lhs.is_subset(rhs) {
                    return fails(format!(
                        "I={} C(I)={} C(rad I)={}",
                        i.render(),
                        ctx.semiring.render_subset(lhs),
                        ctx.semiring.render_subset(rhs)
                    ));
                }
            }
            holds()
        }
        "C8" => {
            let sem = sem.expect("semantics-dependent claim");
            let lat = try_lattice!(ctx);
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            let n = lat.len();
            let mut expected: Vec<(usize, PointSet)> = Vec::new();
            for k in lat.subtractive_indices() {
                let set = match sem {
                    Semantics::DownSet => {
                        let bound = lat.ideal(k).members();
                        PointSet::from_points(
                            n,
                            (0..n).filter(|&j| lat.ideal(j).members().is_subset(bound)),
                        )
                    }
                    Semantics::FixedPoint => PointSet::singleton(n, k),
                };
                expected.push((k, set));
            }
            for (a, (ka, sa)) in expected.iter().enumerate() {
                for (kb, sb) in expected.iter().skip(a + 1) {
                    if sa == sb {
                        return fails(format!(
                            "subtractive {} and {} name one subbasic set",
                            lat.render(*ka),
                            lat.render(*kb)
                        ));
                    }
                }
            }
            let got: BTreeSet<PointSet> = sctx.space.subbasis().iter().cloned().collect();
            let want: BTreeSet<PointSet> = expected.into_iter().map(|(_, s)| s).collect();
            if got != want {
                return fails(format!(
                    "subbasis has {} sets, subtractive ideals {}",
                    got.len(),
                    want.len()
                ));
            }
            holds()
        }
        "C9" => {
            let sem = sem.expect("semantics-dependent claim");
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            match sctx.space.t0_failure() {
                None => holds(),
                Some((p, q)) => fails(format!(
                    "points {} and {} share closure {}",
                    sctx.space.render_point(p),
                    sctx.space.render_point(q),
                    sctx.space.render_point_set(&sctx.space.point_closure(p))
                )),
            }
        }
        "C10" => {
            let sem = sem.expect("semantics-dependent claim");
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            let space = &sctx.space;
            let subtractive = space.subtractive_points();
            if let Some(p) = space.t1_failure_in(&subtractive) {
                return fails(format!(
                    "point {} is not closed within the subtractive subspace",
                    space.render_point(p)
                ));
            }
            for q in 0..space.points() {
                if subtractive.contains(q) {
                    continue;
                }
                let mut extended = subtractive.clone();
                extended.insert(q);
                if space.t1_failure_in(&extended).is_none() {
                    return fails(format!(
                        "extension by {} stays T1",
                        space.render_point(q)
                    ));
                }
            }
            holds()
        }
        "C11" => {
            let sem = sem.expect("semantics-dependent claim");
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            let family = try_family!(sctx);
            for s in sctx.space.subbasis() {
                if s.is_empty() {
                    continue;
                }
                if let Some((a, b)) = reducible_split(family, s) {
                    return fails(format!(
                        "subbasic {} splits into {} and {}",
                        sctx.space.render_point_set(s),
                        sctx.space.render_point_set(&a),
                        sctx.space.render_point_set(&b)
                    ));
                }
            }
            holds()
        }
        "C12" => {
            let sem = sem.expect("semantics-dependent claim");
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            let family = try_family!(sctx);
            for set in family.sorted() {
                if set.is_empty() || reducible_split(family, set).is_some() {
                    continue;
                }
                let generics = generic_points(&sctx.space, set);
                if generics.len() != 1 {
                    let names: Vec<String> =
                        generics.iter().map(|&p| sctx.space.render_point(p)).collect();
                    return fails(format!(
                        "irreducible {} has generic points [{}]",
                        sctx.space.render_point_set(set),
                        names.join(",")
                    ));
                }
            }
            holds()
        }
        "X1" => {
            let lat = try_lattice!(ctx);
            if ctx.semiring.order() > 20 {
                return capped("power-set oracle is limited to order 20");
            }
            let fast: Vec<u64> = lat.ideals().iter().map(|i| i.members().bits()).collect();
            let slow: Vec<u64> =
                ideals_by_brute_force(&ctx.semiring).iter().map(|m| m.bits()).collect();
            if fast == slow {
                holds()
            } else {
                fails(format!(
                    "enumeration found {} ideals, power-set filter {}",
                    fast.len(),
                    slow.len()
                ))
            }
        }
        "X2" => {
            let sem = sem.expect("semantics-dependent claim");
            let sctx = ctx.space(sem).expect("space built for selected semantics");
            let family = try_family!(sctx);
            for p in 0..sctx.space.points() {
                let direct = sctx.space.point_closure(p);
                let via_family =
                    family.min_enclosing(&PointSet::singleton(sctx.space.points(), p));
                if direct != via_family {
                    return fails(format!(
                        "point {}: subbasis route {} family route {}",
                        sctx.space.render_point(p),
                        sctx.space.render_point_set(&direct),
                        sctx.space.render_point_set(&via_family)
                    ));
                }
            }
            holds()
        }
        other => unreachable!("claim {other} is not structure-scoped"),
    }
}

fn eval_hom_claim(
    id: &str,
    hom: &Homomorphism,
    source_ctx: &StructureCtx,
    target_ctx: &StructureCtx,
    sem: Option<Semantics>,
) -> Verdict {
    let source_lat = try_lattice!(source_ctx);
    let target_lat = try_lattice!(target_ctx);
    match id {
        "C13" => {
            for j in target_lat.subtractive_indices() {
                let pre = hom.preimage(target_lat.ideal(j).members());
                let ideal = match Ideal::new(Arc::clone(hom.source()), pre) {
                    Ok(i) => i,
                    Err(e) => return fails(e.to_string()),
                };
                if let Some((x, y)) = ideal.subtractive_failure() {
                    return fails(format!(
                        "J={} preimage={} x={} y={}",
                        target_lat.render(j),
                        ideal.render(),
                        hom.source().label(x),
                        hom.source().label(y)
                    ));
                }
            }
            holds()
        }
        "X4" => {
            for j in 0..target_lat.len() {
                let pre = hom.preimage(target_lat.ideal(j).members());
                if let Err(e) = Ideal::new(Arc::clone(hom.source()), pre) {
                    return fails(e.to_string());
                }
                if source_lat.index_of(pre).is_none() {
                    return fails(format!(
                        "preimage {} of {} is missing from the enumeration",
                        hom.source().render_subset(pre),
                        target_lat.render(j)
                    ));
                }
            }
            holds()
        }
        "C14" | "C15" | "X3" => {
            let sem = sem.expect("semantics-dependent claim");
            let domain = target_ctx.space(sem).expect("space built for selected semantics");
            let codomain = source_ctx.space(sem).expect("space built for selected semantics");
            let im = match induced_point_map(hom, &domain.space, &codomain.space) {
                Ok(im) => im,
                Err(e) => return fails(e.to_string()),
            };
            let domain_family = try_family!(domain);
            let codomain_family = try_family!(codomain);
            match id {
                "C14" => {
                    match continuity_failure(
                        &im,
                        domain.space.points(),
                        domain_family,
                        codomain_family,
                    ) {
                        None => holds(),
                        Some((closed, pull)) => fails(format!(
                            "closed {} pulls back to non-closed {}",
                            codomain.space.render_point_set(&closed),
                            domain.space.render_point_set(&pull)
                        )),
                    }
                }
                "X3" => {
                    let full = continuity_failure(
                        &im,
                        domain.space.points(),
                        domain_family,
                        codomain_family,
                    );
                    let sub = subbasic_continuity_failure(
                        &im,
                        domain.space.points(),
                        domain_family,
                        &codomain.space,
                    );
                    if full.is_none() == sub.is_none() {
                        holds()
                    } else {
                        fails(format!(
                            "full-family continuous={} subbasic continuous={}",
                            full.is_none(),
                            sub.is_none()
                        ))
                    }
                }
                _ => {
                    let cmp = subtractive_subspace_comparison(
                        &im,
                        &domain.space,
                        domain_family,
                        &codomain.space,
                        codomain_family,
                    );
                    if cmp.is_homeomorphism() {
                        return holds();
                    }
                    if let Some(p) = cmp.into_subtractive {
                        return fails(format!(
                            "image of subtractive {} is not subtractive",
                            domain.space.render_point(p)
                        ));
                    }
                    if let Some((p, q)) = cmp.injective {
                        return fails(format!(
                            "not injective: {} and {} map together",
                            domain.space.render_point(p),
                            domain.space.render_point(q)
                        ));
                    }
                    if let Some(p) = cmp.surjective {
                        return fails(format!(
                            "not onto: {} is never hit",
                            codomain.space.render_point(p)
                        ));
                    }
                    if let Some(t) = cmp.continuous {
                        return fails(format!(
                            "trace {} pulls back outside the subspace topology",
                            codomain.space.render_point_set(&t)
                        ));
                    }
                    let t = cmp.closed.expect("some comparison field failed");
                    fails(format!(
                        "trace {} maps outside the subspace topology",
                        domain.space.render_point_set(&t)
                    ))
                }
            }
        }
        other => unreachable!("claim {other} is not homomorphism-scoped"),
    }
}

fn nat_subtractive_members(nat: &NatContext) -> Vec<(String, NatIdeal)> {
    nat.items()
        .iter()
        .filter(|(_, i)| i.is_subtractive())
        .map(|(n, i)| (n.clone(), i.clone()))
        .collect()
}

fn eval_nat_claim(id: &str, nat: &NatContext) -> Verdict {
    let items = nat.items();
    match id {
        "C1.1" => {
            for (name, i) in items {
                let c = i.subtractive_closure();
                let reach = 2 * i.window_bound();
                if let Some(n) = (0..=reach).find(|&n| i.contains(n) && !c.contains(n)) {
                    return fails(format!("I={name} member {n} missing from C(I)={}", short_nat(&c)));
                }
            }
            holds()
        }
        "C1.2" => {
            let zero = NatIdeal::zero();
            if zero.subtractive_closure() == zero {
                holds()
            } else {
                fails(format!("C(<>)={}", short_nat(&zero.subtractive_closure())))
            }
        }
        "C1.3" => {
            let whole = nat_ideal(&[1]).expect("tiny");
            if whole.subtractive_closure() == whole {
                holds()
            } else {
                fails(format!("C(<1>)={}", short_nat(&whole.subtractive_closure())))
            }
        }
        "C1.4" => {
            for (name, i) in items {
                let once = i.subtractive_closure();
                let twice = once.subtractive_closure();
                if once != twice {
                    return fails(format!(
                        "I={name} C(I)={} C(C(I))={}",
                        short_nat(&once),
                        short_nat(&twice)
                    ));
                }
            }
            holds()
        }
        "C1.5" => {
            for (na, a) in items {
                for (nb, b) in items {
                    let bound = a.window_bound().max(b.window_bound()) * 2;
                    let a_in_b = (0..=bound).all(|n| !a.contains(n) || b.contains(n));
                    if !a_in_b {
                        continue;
                    }
                    let ca = a.subtractive_closure();
                    let cb = b.subtractive_closure();
                    let cbound = ca.window_bound().max(cb.window_bound()) * 2;
                    if let Some(n) = (0..=cbound).find(|&n| ca.contains(n) && !cb.contains(n)) {
                        return fails(format!(
                            "I={na} J={nb} C(I) member {n} missing from C(J)"
                        ));
                    }
                }
            }
            holds()
        }
        "C1.6" => {
            for (na, a) in items {
                for (nb, b) in items {
                    let sum = match a.sum(b) {
                        Ok(s) => s,
                        Err(e) => return capped(e),
                    };
                    let cs = sum.subtractive_closure();
                    let ca = a.subtractive_closure();
                    let cb = b.subtractive_closure();
                    let bound =
                        cs.window_bound().max(ca.window_bound()).max(cb.window_bound()) * 2;
                    if let Some(n) = (0..=bound)
                        .find(|&n| (ca.contains(n) || cb.contains(n)) && !cs.contains(n))
                    {
                        return fails(format!("I={na} J={nb} union member {n} escapes C(I+J)"));
                    }
                }
            }
            holds()
        }
        "C1.7" => {
            let mut families: Vec<Vec<usize>> = Vec::new();
            for k in 1..=3.min(items.len()) {
                families.extend(combinations(items.len(), k));
            }
            for family in families {
                let mut meet = items[family[0]].1.clone();
                for &i in &family[1..] {
                    meet = match meet.intersection(&items[i].1) {
                        Ok(m) => m,
                        Err(e) => return capped(e),
                    };
                }
                let lhs = meet.subtractive_closure();
                let closures: Vec<NatIdeal> =
                    family.iter().map(|&i| items[i].1.subtractive_closure()).collect();
                let bound = closures
                    .iter()
                    .map(NatIdeal::window_bound)
                    .chain([lhs.window_bound()])
                    .max()
                    .expect("nonempty")
                    * 2;
                for n in 0..=bound {
                    let rhs = closures.iter().all(|c| c.contains(n));
                    if lhs.contains(n) != rhs {
                        let names: Vec<String> =
                            family.iter().map(|&i| items[i].0.clone()).collect();
                        return fails(format!(
                            "family=[{}] disagreement at {n}: C(meet)={} meet(C)={}",
                            names.join(","),
                            lhs.contains(n),
                            rhs
                        ));
                    }
                }
            }
            holds()
        }
        "C1.8" => {
            let subtractive = nat_subtractive_members(nat);
            for (name, i) in items {
                let c = i.subtractive_closure();
                if !c.is_subtractive() {
                    return fails(format!("C({name})={} is not subtractive", short_nat(&c)));
                }
                let bound = 2 * i.window_bound().max(c.window_bound());
                if let Some(n) = (0..=bound).find(|&n| i.contains(n) && !c.contains(n)) {
                    return fails(format!("C({name}) loses member {n}"));
                }
                for (kn, k) in &subtractive {
                    let kb = 2 * i.window_bound().max(k.window_bound()).max(c.window_bound());
                    let contains_i = (0..=kb).all(|n| !i.contains(n) || k.contains(n));
                    if contains_i
                        && let Some(n) = (0..=kb).find(|&n| c.contains(n) && !k.contains(n))
                    {
                        return fails(format!(
                            "K={kn} holds I={name} but C(I) member {n} escapes"
                        ));
                    }
                }
            }
            holds()
        }
        "C1.9" => {
            for (name, i) in items {
                let fixed = i.subtractive_closure() == *i;
                match i.subtractive_failure() {
                    Some((x, y)) if fixed => {
                        return fails(format!("I={name} fixed point yet x={x} y={y} breaks it"));
                    }
                    None if !fixed => {
                        return fails(format!("I={name} has no witness yet closure differs"));
                    }
                    _ => {}
                }
            }
            holds()
        }
        "C2" => {
            // Subtractive comparands: the subtractive family members plus
            // every closure that arises from the family.
            let mut comparands = nat_subtractive_members(nat);
            for (_, i) in items {
                let c = i.subtractive_closure();
                if !comparands.iter().any(|(_, k)| *k == c) {
                    comparands.push((short_nat(&c), c));
                }
            }
            for (name, i) in items {
                let c = i.subtractive_closure();
                for (kn, k) in &comparands {
                    let bound =
                        2 * i.window_bound().max(k.window_bound()).max(c.window_bound());
                    let closure_below = (0..=bound).all(|n| !c.contains(n) || k.contains(n));
                    let ideal_below = (0..=bound).all(|n| !i.contains(n) || k.contains(n));
                    if closure_below != ideal_below {
                        return fails(format!(
                            "I={name} K={kn} closure-inside={closure_below} ideal-inside={ideal_below}"
                        ));
                    }
                }
            }
            holds()
        }
        "C3" => {
            let subtractive = nat_subtractive_members(nat);
            for (na, a) in &subtractive {
                for (nb, b) in &subtractive {
                    let p = match a.product(b) {
                        Ok(p) => p,
                        Err(e) => return capped(e),
                    };
                    let bound = 2 * p.window_bound().max(a.window_bound()).max(b.window_bound());
                    if let Some(n) =
                        (0..=bound).find(|&n| p.contains(n) && !(a.contains(n) && b.contains(n)))
                    {
                        return fails(format!("I={na} J={nb} product member {n} escapes I^J"));
                    }
                    if let Some((x, y)) = p.subtractive_failure() {
                        return fails(format!(
                            "I={na} J={nb} IJ={} not subtractive: x={x} y={y}",
                            short_nat(&p)
                        ));
                    }
                }
            }
            holds()
        }
        "C4" => {
            let subtractive = nat_subtractive_members(nat);
            let mut families: Vec<Vec<usize>> = Vec::new();
            for k in 1..=3.min(subtractive.len()) {
                families.extend(combinations(subtractive.len(), k));
            }
            for family in families {
                let mut meet = subtractive[family[0]].1.clone();
                for &i in &family[1..] {
                    meet = match meet.intersection(&subtractive[i].1) {
                        Ok(m) => m,
                        Err(e) => return capped(e),
                    };
                }
                if let Some((x, y)) = meet.subtractive_failure() {
                    let names: Vec<String> =
                        family.iter().map(|&i| subtractive[i].0.clone()).collect();
                    return fails(format!(
                        "family=[{}] meet={} x={x} y={y}",
                        names.join(","),
                        short_nat(&meet)
                    ));
                }
            }
            holds()
        }
        "C5" => {
            let evens = nat_ideal(&[2]).expect("tiny");
            let triples = nat_ideal(&[3]).expect("tiny");
            if !evens.is_subtractive() {
                return fails("the even ideal is not subtractive".into());
            }
            if !triples.is_subtractive() {
                return fails("the triple ideal is not subtractive".into());
            }
            let sum = match evens.sum(&triples) {
                Ok(s) => s,
                Err(e) => return capped(e),
            };
            for n in 0..=1000u64 {
                if sum.contains(n) != (n != 1) {
                    return fails(format!("sum membership wrong at {n}"));
                }
            }
            match sum.subtractive_failure() {
                None => fails("the sum is unexpectedly subtractive".into()),
                Some((x, y)) => {
                    if sum.contains(x) && sum.contains(x + y) && !sum.contains(y) {
                        holds()
                    } else {
                        fails(format!("witness x={x} y={y} does not re-validate"))
                    }
                }
            }
        }
        "C7" => {
            for (name, i) in items {
                let lhs = i.subtractive_closure();
                let rhs = i.radical().subtractive_closure();
                let bound = 2 * lhs.window_bound().max(rhs.window_bound());
                if let Some(n) = (0..=bound).find(|&n| lhs.contains(n) && !rhs.contains(n)) {
                    return fails(format!("I={name} C(I) member {n} escapes C(rad I)"));
                }
            }
            holds()
        }
        other => unreachable!("claim {other} does not apply to the naturals"),
    }
}

fn applicable(c: &Claim, filter: &Option<BTreeSet<String>>) -> bool {
    filter.as_ref().is_none_or(|f| f.contains(c.id))
}

fn semantics_slots(c: &Claim, selected: &[Semantics]) -> Vec<Option<Semantics>> {
    if c.semantics_dependent {
        selected.iter().map(|&s| Some(s)).collect()
    } else {
        vec![None]
    }
}

fn timed<F: FnOnce() -> Verdict>(
    claim: &Claim,
    structure: String,
    sem: Option<Semantics>,
    f: F,
) -> ClaimReport {
    let start = Instant::now();
    let (outcome, witness) = f();
    ClaimReport {
        claim_id: claim.id,
        structure,
        semantics: sem,
        outcome,
        witness,
        must_hold: claim.must_hold,
        elapsed: start.elapsed(),
    }
}

/// Evaluates one structure-scoped claim; `None` when the claim does not
/// apply to finite structures or the semantics slot is wrong.
pub fn run_structure_claim(
    id: &str,
    ctx: &StructureCtx,
    sem: Option<Semantics>,
) -> Option<ClaimReport> {
    let c = claim(id)?;
    if c.scope != Scope::Structure || c.semantics_dependent != sem.is_some() {
        return None;
    }
    Some(timed(c, ctx.name().to_string(), sem, || eval_structure_claim(id, ctx, sem)))
}

/// Evaluates one homomorphism-scoped claim for a specific map. The
/// structure name in the report is `source->target#k` with `k` the map's
/// position in lexicographic enumeration order.
pub fn run_hom_claim(
    id: &str,
    hom: &Homomorphism,
    hom_index: usize,
    source_ctx: &StructureCtx,
    target_ctx: &StructureCtx,
    sem: Option<Semantics>,
) -> Option<ClaimReport> {
    let c = claim(id)?;
    if c.scope != Scope::Homomorphism || c.semantics_dependent != sem.is_some() {
        return None;
    }
    if id == "C15" && !hom.is_surjective() {
        return None;
    }
    let name = format!("{}->{}#{hom_index}", source_ctx.name(), target_ctx.name());
    Some(timed(c, name, sem, || eval_hom_claim(id, hom, source_ctx, target_ctx, sem)))
}

/// Evaluates one claim over the pinned ideals of the naturals.
pub fn run_nat_claim(id: &str, nat: &NatContext) -> Option<ClaimReport> {
    let c = claim(id)?;
    if !c.on_nat && c.scope != Scope::Nat {
        return None;
    }
    Some(timed(c, "Nat".to_string(), None, || eval_nat_claim(id, nat)))
}

#[derive(Debug)]
pub struct SuiteReport {
    pub reports: Vec<ClaimReport>,
    pub structures: usize,
}

impl SuiteReport {
    pub fn must_hold_failures(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.must_hold && r.outcome == Outcome::Fails)
            .count()
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.reports.iter().filter(|r| r.outcome == outcome).count()
    }

    /// Full deterministic report: one line per cell plus a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.line());
            out.push('\n');
        }
        out.push_str(&format!(
            "SUMMARY structures={} claims={} holds={} fails={} cap={} must-hold-failures={}\n",
            self.structures,
            self.reports.len(),
            self.count(Outcome::Holds),
            self.count(Outcome::Fails),
            self.count(Outcome::Cap),
            self.must_hold_failures()
        ));
        out
    }

    /// 0 success, 1 must-hold failure, 3 cap exceeded under strict mode.
    pub fn exit_code(&self, strict: bool) -> u8 {
        if self.must_hold_failures() > 0 {
            1
        } else if strict && self.count(Outcome::Cap) > 0 {
            3
        } else {
            0
        }
    }
}

/// Runs every selected claim over the corpus in deterministic order:
/// corpus index, then registry order, then semantics, with homomorphism
/// claims fanned out over targets in corpus order and maps in enumeration
/// order. The pinned naturals come last.
pub fn run_suite(corpus: &[Arc<FiniteSemiring>], opts: &SuiteOptions) -> SuiteReport {
    let ctxs: Vec<StructureCtx> = corpus
        .iter()
        .map(|s| StructureCtx::build(Arc::clone(s), &opts.semantics, &opts.caps))
        .collect();
    let homs: Vec<Vec<Vec<Homomorphism>>> = corpus
        .iter()
        .map(|s| corpus.iter().map(|t| enumerate_homomorphisms(s, t)).collect())
        .collect();

    let mut reports = Vec::new();
    for (si, ctx) in ctxs.iter().enumerate() {
        for c in REGISTRY {
            if !applicable(c, &opts.claim_filter) {
                continue;
            }
            match c.scope {
                Scope::Structure => {
                    for sem in semantics_slots(c, &opts.semantics) {
                        reports.extend(run_structure_claim(c.id, ctx, sem));
                    }
                }
                Scope::Homomorphism => {
                    for (ti, tctx) in ctxs.iter().enumerate() {
                        for (hi, hom) in homs[si][ti].iter().enumerate() {
                            for sem in semantics_slots(c, &opts.semantics) {
                                reports.extend(run_hom_claim(c.id, hom, hi, ctx, tctx, sem));
                            }
                        }
                    }
                }
                Scope::Nat => {}
            }
        }
    }

    let mut structures = ctxs.len();
    if opts.include_nat {
        structures += 1;
        let nat = NatContext::with_extras(&opts.nat_extras);
        for c in REGISTRY {
            if !applicable(c, &opts.claim_filter) {
                continue;
            }
            if c.on_nat || c.scope == Scope::Nat {
                reports.extend(run_nat_claim(c.id, &nat));
            }
        }
    }

    SuiteReport { reports, structures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring;

    fn standard_corpus() -> Vec<Arc<FiniteSemiring>> {
        vec![
            Arc::new(semiring::boolean()),
            Arc::new(semiring::zmod(2).unwrap()),
            Arc::new(semiring::zmod(4).unwrap()),
            Arc::new(semiring::truncated_nat(2).unwrap()),
            Arc::new(semiring::truncated_nat(3).unwrap()),
            Arc::new(semiring::chain_minplus(4).unwrap()),
        ]
    }

    fn ctx_for(s: FiniteSemiring) -> StructureCtx {
        StructureCtx::build(Arc::new(s), &Semantics::BOTH, &SuiteCaps::default())
    }

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        let expected = [
            "C1.1", "C1.2", "C1.3", "C1.4", "C1.5", "C1.6", "C1.7", "C1.8", "C1.9", "C2",
            "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
            "C15", "X1", "X2", "X3", "X4",
        ];
        assert_eq!(ids, expected);
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len());
    }

    #[test]
    fn must_hold_set_is_frozen() {
        let must: Vec<&str> =
            REGISTRY.iter().filter(|c| c.must_hold).map(|c| c.id).collect();
        assert_eq!(
            must,
            [
                "C1.1", "C1.2", "C1.3", "C1.4", "C1.5", "C1.6", "C1.7", "C1.8", "C1.9",
                "C2", "C4", "C13", "C14", "X1", "X2", "X3", "X4"
            ]
        );
    }

    #[test]
    fn closure_claims_hold_on_truncated_nat() {
        let ctx = ctx_for(semiring::truncated_nat(2).unwrap());
        for id in ["C1.1", "C1.2", "C1.3", "C1.4", "C1.5", "C1.6", "C1.7", "C1.8", "C1.9"] {
            let r = run_structure_claim(id, &ctx, None).unwrap();
            assert_eq!(r.outcome, Outcome::Holds, "{id}: {:?}", r.witness);
        }
    }

    #[test]
    fn separation_verdicts_on_truncated_nat() {
        let ctx = ctx_for(semiring::truncated_nat(2).unwrap());
        let down = run_structure_claim("C9", &ctx, Some(Semantics::DownSet)).unwrap();
        assert_eq!(down.outcome, Outcome::Fails);
        let w = down.witness.unwrap();
        assert!(w.contains("{0,T}") && w.contains("{0,1,T}"), "{w}");

        let fixed = run_structure_claim("C9", &ctx, Some(Semantics::FixedPoint)).unwrap();
        assert_eq!(fixed.outcome, Outcome::Holds);

        let down12 = run_structure_claim("C12", &ctx, Some(Semantics::DownSet)).unwrap();
        assert_eq!(down12.outcome, Outcome::Fails);
        let w12 = down12.witness.unwrap();
        assert!(w12.contains("generic points"), "{w12}");

        for id in ["C11", "C12"] {
            let fixed = run_structure_claim(id, &ctx, Some(Semantics::FixedPoint)).unwrap();
            assert_eq!(fixed.outcome, Outcome::Holds, "{id}");
        }
    }

    #[test]
    fn t0_under_fixedpoint_needs_two_non_subtractive_ideals() {
        // S4 has two ideals strictly between zero and itself, both with the
        // whole semiring as closure.
        let ctx = ctx_for(semiring::truncated_nat(3).unwrap());
        let r = run_structure_claim("C9", &ctx, Some(Semantics::FixedPoint)).unwrap();
        assert_eq!(r.outcome, Outcome::Fails);
    }

    #[test]
    fn nat_claims_hold() {
        let nat = NatContext::standard();
        for id in [
            "C1.1", "C1.2", "C1.3", "C1.4", "C1.5", "C1.6", "C1.7", "C1.8", "C1.9", "C2",
            "C3", "C4", "C5", "C7",
        ] {
            let r = run_nat_claim(id, &nat).unwrap();
            assert_eq!(r.outcome, Outcome::Holds, "{id}: {:?}", r.witness);
        }
    }

    #[test]
    fn hom_claims_on_the_truncation_collapse() {
        let s4 = ctx_for(semiring::truncated_nat(3).unwrap());
        let s3 = ctx_for(semiring::truncated_nat(2).unwrap());
        let homs = enumerate_homomorphisms(&s4.semiring, &s3.semiring);
        let (hi, pi) = homs
            .iter()
            .enumerate()
            .find(|(_, h)| h.map() == [0, 1, 2, 2])
            .expect("collapse map exists");
        let c13 = run_hom_claim("C13", pi, hi, &s4, &s3, None).unwrap();
        assert_eq!(c13.outcome, Outcome::Holds, "{:?}", c13.witness);
        assert!(c13.structure.starts_with("S4->S3#"));
        for sem in Semantics::BOTH {
            for id in ["C14", "C15", "X3"] {
                let r = run_hom_claim(id, pi, hi, &s4, &s3, Some(sem)).unwrap();
                assert_eq!(r.outcome, Outcome::Holds, "{id} {sem}: {:?}", r.witness);
            }
        }
        let x4 = run_hom_claim("X4", pi, hi, &s4, &s3, None).unwrap();
        assert_eq!(x4.outcome, Outcome::Holds);
    }

    #[test]
    fn report_lines_follow_the_grammar() {
        let ctx = ctx_for(semiring::truncated_nat(2).unwrap());
        let r = run_structure_claim("C9", &ctx, Some(Semantics::DownSet)).unwrap();
        let line = r.line();
        assert!(line.starts_with("CLAIM C9 STRUCT S3 SEM downset RESULT fails WITNESS "));
        let ok = run_structure_claim("C1.1", &ctx, None).unwrap();
        assert_eq!(ok.line(), "CLAIM C1.1 STRUCT S3 SEM na RESULT holds");
    }

    #[test]
    fn suite_is_deterministic_and_green_on_the_standard_corpus() {
        let corpus = standard_corpus();
        let opts = SuiteOptions::default();
        let a = run_suite(&corpus, &opts);
        let b = run_suite(&corpus, &opts);
        assert_eq!(a.render(), b.render());
        assert_eq!(a.must_hold_failures(), 0);
        assert_eq!(a.count(Outcome::Cap), 0);
        assert_eq!(a.exit_code(true), 0);
        assert_eq!(a.structures, 7);
    }

    #[test]
    fn empty_corpus_gives_an_empty_report() {
        let opts = SuiteOptions { include_nat: false, ..SuiteOptions::default() };
        let report = run_suite(&[], &opts);
        assert!(report.reports.is_empty());
        assert_eq!(report.exit_code(true), 0);
        assert_eq!(report.render(), "SUMMARY structures=0 claims=0 holds=0 fails=0 cap=0 must-hold-failures=0\n");
    }

    #[test]
    fn claim_filter_restricts_rows() {
        let corpus = vec![Arc::new(semiring::boolean())];
        let mut opts = SuiteOptions { include_nat: false, ..SuiteOptions::default() };
        opts.claim_filter = Some(["C9".to_string()].into_iter().collect());
        let report = run_suite(&corpus, &opts);
        assert_eq!(report.reports.len(), 2);
        assert!(report.reports.iter().all(|r| r.claim_id == "C9"));
    }

    #[test]
    fn cap_is_reported_when_the_closed_family_overflows() {
        let corpus = vec![Arc::new(semiring::chain_minplus(4).unwrap())];
        let mut opts = SuiteOptions { include_nat: false, ..SuiteOptions::default() };
        opts.caps.max_closed = 3;
        opts.claim_filter = Some(["C11".to_string()].into_iter().collect());
        let report = run_suite(&corpus, &opts);
        assert!(report.reports.iter().any(|r| r.outcome == Outcome::Cap));
        assert_eq!(report.exit_code(false), 0);
        assert_eq!(report.exit_code(true), 3);
    }

    #[test]
    fn closure_does_not_commute_with_intersections_in_general() {
        // Order-4 refutation: two ideals {0,a}, {0,b} whose closures are
        // {0,a,b} and {0,b}, so the intersected closures keep b while the
        // closure of the intersection {0} does not.
        let s = FiniteSemiring::new(
            "pinch4",
            vec!["0".into(), "1".into(), "a".into(), "b".into()],
            vec![0, 1, 2, 3, 1, 1, 1, 1, 2, 1, 2, 2, 3, 1, 2, 3],
            vec![0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 0, 0, 3, 0, 0],
            0,
            1,
        )
        .unwrap();
        let ctx = ctx_for(s);
        let r = run_structure_claim("C1.7", &ctx, None).unwrap();
        assert_eq!(r.outcome, Outcome::Fails);
        let w = r.witness.unwrap();
        assert!(w.contains("family=[{0,a},{0,b}]"), "{w}");
        assert!(w.contains("C(meet)={0}"), "{w}");

        // The one-sided inclusion survives: monotonicity still holds here.
        for id in ["C1.1", "C1.4", "C1.5", "C1.8", "C1.9", "C2", "C4"] {
            let ok = run_structure_claim(id, &ctx, None).unwrap();
            assert_eq!(ok.outcome, Outcome::Holds, "{id}: {:?}", ok.witness);
        }
    }

    fn additively_idempotent_three() -> FiniteSemiring {
        // 1 + 1 = 1 and a absorbs addition; {0,a} is an ideal whose closure
        // is the whole structure.
        FiniteSemiring::new(
            "flat3",
            vec!["0".into(), "1".into(), "a".into()],
            vec![0, 1, 2, 1, 1, 2, 2, 2, 2],
            vec![0, 0, 0, 0, 1, 2, 0, 2, 2],
            0,
            1,
        )
        .unwrap()
    }

    #[test]
    fn induced_map_discontinuity_for_a_non_surjective_map() {
        // The inclusion of the booleans misses a, so the point preimages
        // separate the ideal {0,a} from its closure; no closed set does.
        let b = ctx_for(semiring::boolean());
        let t = ctx_for(additively_idempotent_three());
        let homs = enumerate_homomorphisms(&b.semiring, &t.semiring);
        let (hi, inc) = homs
            .iter()
            .enumerate()
            .find(|(_, h)| h.map() == [0, 1])
            .expect("boolean inclusion exists");
        assert!(!inc.is_surjective());
        for sem in Semantics::BOTH {
            let c14 = run_hom_claim("C14", inc, hi, &b, &t, Some(sem)).unwrap();
            assert_eq!(c14.outcome, Outcome::Fails, "{sem}");
            let w = c14.witness.unwrap();
            assert!(w.contains("pulls back to non-closed {{0},{0,a}}"), "{sem}: {w}");
            // Subbasic and full continuity verdicts still agree, and the
            // preimage claims stay intact: the failure is geometric, not
            // algebraic.
            let x3 = run_hom_claim("X3", inc, hi, &b, &t, Some(sem)).unwrap();
            assert_eq!(x3.outcome, Outcome::Holds, "{sem}: {:?}", x3.witness);
        }
        let c13 = run_hom_claim("C13", inc, hi, &b, &t, None).unwrap();
        assert_eq!(c13.outcome, Outcome::Holds, "{:?}", c13.witness);
        let x4 = run_hom_claim("X4", inc, hi, &b, &t, None).unwrap();
        assert_eq!(x4.outcome, Outcome::Holds, "{:?}", x4.witness);
        // C15 does not apply: the map is not surjective.
        assert!(run_hom_claim("C15", inc, hi, &b, &t, Some(Semantics::DownSet)).is_none());
    }

    #[test]
    fn failure_witnesses_revalidate_semantically() {
        let ctx = ctx_for(semiring::truncated_nat(2).unwrap());
        let space = &ctx.space(Semantics::DownSet).unwrap().space;
        // The reported T0 witness pair must genuinely share a closure.
        if let Some((p, q)) = space.t0_failure() {
            assert_eq!(space.point_closure(p), space.point_closure(q));
        } else {
            panic!("expected a separation failure");
        }
    }
}
