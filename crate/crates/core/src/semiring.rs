//! Finite commutative semirings: table validation, built-in families, and
//! homomorphism enumeration.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported order. Element subsets are packed into a `u64`.
pub const MAX_ORDER: usize = 64;

/// Subset of a semiring's element indices, packed as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> ElemSet {
        debug_assert!(i < MAX_ORDER);
        ElemSet(1 << i)
    }

    /// All indices below `n`.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ORDER && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ORDER);
        self.0 |= 1 << i;
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersect(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Axiom families checked during validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    AddCommutativity,
    AddAssociativity,
    AddIdentity,
    MulCommutativity,
    MulAssociativity,
    MulIdentity,
    Absorption,
    Distributivity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddCommutativity => "add-commutativity",
            Axiom::AddAssociativity => "add-associativity",
            Axiom::AddIdentity => "add-identity",
            Axiom::MulCommutativity => "mul-commutativity",
            Axiom::MulAssociativity => "mul-associativity",
            Axiom::MulIdentity => "mul-identity",
            Axiom::Absorption => "absorption",
            Axiom::Distributivity => "distributivity",
        }
    }
}

/// One violated axiom family with a witness tuple of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom.name())?;
        for (k, x) in self.witness.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Error)]
pub enum SemiringError {
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),
    #[error("unknown semiring family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter for family `{family}`: {reason}")]
    InvalidParam { family: &'static str, reason: String },
}

/// Checks every axiom family over full tables, returning one witness per
/// violated family. `add` and `mul` are row-major `n * n` tables of indices.
pub fn check_axioms(
    n: usize,
    add: &[usize],
    mul: &[usize],
    zero: usize,
    one: usize,
) -> Vec<AxiomViolation> {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    let mut out = Vec::new();
    let mut push = |axiom: Axiom, witness: Vec<usize>| out.push(AxiomViolation { axiom, witness });

    'comm_a: for x in 0..n {
        for y in x + 1..n {
            if a(x, y) != a(y, x) {
                push(Axiom::AddCommutativity, vec![x, y]);
                break 'comm_a;
            }
        }
    }
    'assoc_a: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    push(Axiom::AddAssociativity, vec![x, y, z]);
                    break 'assoc_a;
                }
            }
        }
    }
    for x in 0..n {
        if a(zero, x) != x || a(x, zero) != x {
            push(Axiom::AddIdentity, vec![x]);
            break;
        }
    }
    'comm_m: for x in 0..n {
        for y in x + 1..n {
            if m(x, y) != m(y, x) {
                push(Axiom::MulCommutativity, vec![x, y]);
                break 'comm_m;
            }
        }
    }
    'assoc_m: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    push(Axiom::MulAssociativity, vec![x, y, z]);
                    break 'assoc_m;
                }
            }
        }
    }
    for x in 0..n {
        if m(one, x) != x || m(x, one) != x {
            push(Axiom::MulIdentity, vec![x]);
            break;
        }
    }
    for x in 0..n {
        if m(zero, x) != zero || m(x, zero) != zero {
            push(Axiom::Absorption, vec![x]);
            break;
        }
    }
    'distr: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(x, a(y, z)) != a(m(x, y), m(x, z))
                    || m(a(y, z), x) != a(m(y, x), m(z, x))
                {
                    push(Axiom::Distributivity, vec![x, y, z]);
                    break 'distr;
                }
            }
        }
    }
    out
}

/// A finite commutative semiring given by explicit Cayley tables.
///
/// Construction validates every axiom; a value of this type is always a
/// commutative semiring with absorbing zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSemiring {
    name: String,
    elements: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl FiniteSemiring {
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<FiniteSemiring, SemiringError> {
        let name = name.into();
        let n = elements.len();
        if n == 0 {
            return Err(SemiringError::Shape("no elements".into()));
        }
        if n > MAX_ORDER {
            return Err(SemiringError::Shape(format!(
                "order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        for (i, l) in elements.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) || l.starts_with('#') {
                return Err(SemiringError::Shape(format!(
                    "element label {i} (`{l}`) must be a nonempty token without whitespace or a leading `#`"
                )));
            }
            if elements[..i].contains(l) {
                return Err(SemiringError::Shape(format!("duplicate element label `{l}`")));
            }
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(SemiringError::Shape(format!(
                "tables must have {n}x{n} entries, got add={}, mul={}",
                add.len(),
                mul.len()
            )));
        }
        if let Some(&e) = add.iter().chain(mul.iter()).find(|&&e| e >= n) {
            return Err(SemiringError::Shape(format!(
                "table entry {e} out of range for order {n}"
            )));
        }
        if zero >= n || one >= n {
            return Err(SemiringError::Shape("zero/one index out of range".into()));
        }
        let violations = check_axioms(n, &add, &mul, zero, one);
        if !violations.is_empty() {
            return Err(SemiringError::Axioms(violations));
        }
        Ok(FiniteSemiring { name, elements, add, mul, zero, one })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order() + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order() + y]
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    /// Renders a subset as `{l1,l2,...}` in index order.
    pub fn render_subset(&self, set: ElemSet) -> String {
        let mut s = String::from("{");
        for (k, i) in set.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(self.label(i));
        }
        s.push('}');
        s
    }
}

/// Builds a built-in family member by name. Parameterized families require
/// `param`; `boolean` takes none.
pub fn builtin(family: &str, param: Option<usize>) -> Result<FiniteSemiring, SemiringError> {
    match (family, param) {
        ("boolean", None) => Ok(boolean()),
        ("boolean", Some(_)) => Err(SemiringError::InvalidParam {
            family: "boolean",
            reason: "takes no parameter".into(),
        }),
        ("zmod", Some(n)) => zmod(n),
        ("truncated_nat", Some(k)) => truncated_nat(k),
        ("chain_minplus", Some(k)) => chain_minplus(k),
        ("zmod", None) => Err(SemiringError::InvalidParam {
            family: "zmod",
            reason: "missing modulus".into(),
        }),
        ("truncated_nat", None) => Err(SemiringError::InvalidParam {
            family: "truncated_nat",
            reason: "missing threshold".into(),
        }),
        ("chain_minplus", None) => Err(SemiringError::InvalidParam {
            family: "chain_minplus",
            reason: "missing order".into(),
        }),
        _ => Err(SemiringError::UnknownFamily(family.into())),
    }
}

/// Two-element semiring on {0,1} with 1+1 = 1.
pub fn boolean() -> FiniteSemiring {
    FiniteSemiring::new(
        "B",
        vec!["0".into(), "1".into()],
        vec![0, 1, 1, 1],
        vec![0, 0, 0, 1],
        0,
        1,
    )
    .expect("boolean semiring is valid")
}

/// Integers modulo `n` with both operations mod `n`.
pub fn zmod(n: usize) -> Result<FiniteSemiring, SemiringError> {
    if n == 0 || n > MAX_ORDER {
        return Err(SemiringError::InvalidParam {
            family: "zmod",
            reason: format!("modulus must be in 1..={MAX_ORDER}, got {n}"),
        });
    }
    let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            add[x * n + y] = (x + y) % n;
            mul[x * n + y] = (x * y) % n;
        }
    }
    FiniteSemiring::new(format!("Z{n}"), elements, add, mul, 0, 1 % n)
}

/// Naturals truncated at `k`: elements 0..k-1 plus an absorbing top `T`
/// standing for every value >= k. Order is `k + 1`.
pub fn truncated_nat(k: usize) -> Result<FiniteSemiring, SemiringError> {
    let n = k + 1;
    if n > MAX_ORDER {
        return Err(SemiringError::InvalidParam {
            family: "truncated_nat",
            reason: format!("threshold must be below {MAX_ORDER}, got {k}"),
        });
    }
    let mut elements: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    elements.push("T".into());
    let clamp = |v: usize| if v >= k { k } else { v };
    // Index k is T; products/sums involving T saturate, except 0 * T = 0.
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            add[x * n + y] = if x == k || y == k { k } else { clamp(x + y) };
            mul[x * n + y] = if x == 0 || y == 0 {
                0
            } else if x == k || y == k {
                k
            } else {
                clamp(x * y)
            };
        }
    }
    let one = if k == 0 { 0 } else { 1 };
    FiniteSemiring::new(format!("S{n}"), elements, add, mul, 0, one)
}

/// Min-plus chain on `k` levels: elements 0..k-2 plus `inf`, addition is
/// minimum, multiplication adds levels and saturates at `inf`. `inf` is the
/// additive zero and level 0 the multiplicative one.
pub fn chain_minplus(k: usize) -> Result<FiniteSemiring, SemiringError> {
    if k == 0 || k > MAX_ORDER {
        return Err(SemiringError::InvalidParam {
            family: "chain_minplus",
            reason: format!("order must be in 1..={MAX_ORDER}, got {k}"),
        });
    }
    let n = k;
    let inf = n - 1;
    let mut elements: Vec<String> = (0..inf).map(|i| i.to_string()).collect();
    elements.push("inf".into());
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            add[x * n + y] = x.min(y);
            mul[x * n + y] = (x + y).min(inf);
        }
    }
    let one = if n == 1 { inf } else { 0 };
    FiniteSemiring::new(format!("minplus{k}"), elements, add, mul, inf, one)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomomorphismError {
    #[error("map has {got} entries, source has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("map entry {value} at position {position} exceeds target order {order}")]
    OutOfRange { position: usize, value: usize, order: usize },
    #[error("map does not send zero to zero")]
    ZeroNotPreserved,
    #[error("map does not send one to one")]
    OneNotPreserved,
    #[error("map breaks addition at ({x},{y})")]
    AdditionNotPreserved { x: usize, y: usize },
    #[error("map breaks multiplication at ({x},{y})")]
    MultiplicationNotPreserved { x: usize, y: usize },
}

/// A semiring homomorphism: preserves both operations, one, and zero.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Arc<FiniteSemiring>,
    target: Arc<FiniteSemiring>,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(
        source: Arc<FiniteSemiring>,
        target: Arc<FiniteSemiring>,
        map: Vec<usize>,
    ) -> Result<Homomorphism, HomomorphismError> {
        let n = source.order();
        let m = target.order();
        if map.len() != n {
            return Err(HomomorphismError::LengthMismatch { expected: n, got: map.len() });
        }
        if let Some(position) = map.iter().position(|&v| v >= m) {
            return Err(HomomorphismError::OutOfRange {
                position,
                value: map[position],
                order: m,
            });
        }
        if map[source.zero()] != target.zero() {
            return Err(HomomorphismError::ZeroNotPreserved);
        }
        if map[source.one()] != target.one() {
            return Err(HomomorphismError::OneNotPreserved);
        }
        for x in 0..n {
            for y in 0..n {
                if map[source.add(x, y)] != target.add(map[x], map[y]) {
                    return Err(HomomorphismError::AdditionNotPreserved { x, y });
                }
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(HomomorphismError::MultiplicationNotPreserved { x, y });
                }
            }
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn source(&self) -> &Arc<FiniteSemiring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemiring> {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let image = ElemSet::from_indices(self.map.iter().copied());
        image == self.target.full_set()
    }

    /// Indices of source elements mapped into `set`.
    pub fn preimage(&self, set: ElemSet) -> ElemSet {
        ElemSet::from_indices((0..self.source.order()).filter(|&x| set.contains(self.map[x])))
    }

    /// Preimage of the target's zero.
    pub fn kernel(&self) -> ElemSet {
        self.preimage(ElemSet::singleton(self.target.zero()))
    }

    /// Renders the graph as `x->fx` pairs in source index order.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (x, &fx) in self.map.iter().enumerate() {
            if x > 0 {
                s.push(',');
            }
            s.push_str(self.source.label(x));
            s.push_str("->");
            s.push_str(self.target.label(fx));
        }
        s
    }
}

/// All homomorphisms from `source` to `target` in lexicographic order of
/// their graphs. Exhaustive backtracking with partial-constraint pruning.
pub fn enumerate_homomorphisms(
    source: &Arc<FiniteSemiring>,
    target: &Arc<FiniteSemiring>,
) -> Vec<Homomorphism> {
    let n = source.order();
    let m = target.order();
    let mut fixed = vec![usize::MAX; n];
    fixed[source.zero()] = target.zero();
    // A degenerate source with zero = one maps onto targets where they agree.
    if fixed[source.one()] != usize::MAX && fixed[source.one()] != target.one() {
        return Vec::new();
    }
    fixed[source.one()] = target.one();

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];

    fn consistent(s: &FiniteSemiring, t: &FiniteSemiring, map: &[usize], filled: usize) -> bool {
        for x in 0..=filled {
            for y in 0..=filled {
                let sa = s.add(x, y);
                if sa <= filled && map[sa] != t.add(map[x], map[y]) {
                    return false;
                }
                let sm = s.mul(x, y);
                if sm <= filled && map[sm] != t.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn recurse(
        s: &Arc<FiniteSemiring>,
        t: &Arc<FiniteSemiring>,
        fixed: &[usize],
        map: &mut Vec<usize>,
        pos: usize,
        m: usize,
        out: &mut Vec<Homomorphism>,
    ) {
        if pos == map.len() {
            let hom = Homomorphism::new(Arc::clone(s), Arc::clone(t), map.clone())
                .expect("backtracking emits only consistent maps");
            out.push(hom);
            return;
        }
        let candidates: Vec<usize> = if fixed[pos] != usize::MAX {
            vec![fixed[pos]]
        } else {
            (0..m).collect()
        };
        for v in candidates {
            map[pos] = v;
            if consistent(s, t, map, pos) {
                recurse(s, t, fixed, map, pos + 1, m, out);
            }
        }
        map[pos] = usize::MAX;
    }

    recurse(source, target, &fixed, &mut map, 0, m, &mut out);
    out
}
