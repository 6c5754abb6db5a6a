//! Exhaustive search for commutative semirings of a given order by
//! backtracking over Cayley tables.
//!
//! Element 0 is the additive zero and element 1 the multiplicative one, so
//! the zero row, one row, and absorption entries are fixed and only the
//! upper triangles of both tables are free. Optional canonicalization keeps
//! one representative per relabeling orbit: the permutations fixing 0 and 1.

use crate::semiring::{FiniteSemiring, SemiringError};

const UNSET: usize = usize::MAX;

/// Largest order searched exhaustively.
pub const MAX_SEARCH_ORDER: usize = 4;

#[derive(Debug)]
pub struct SearchOutcome {
    pub semirings: Vec<FiniteSemiring>,
    /// False when an emission limit cut the search short.
    pub complete: bool,
}

fn labels(n: usize) -> Vec<String> {
    ["0", "1", "a", "b"][..n].iter().map(|l| l.to_string()).collect()
}

/// Checks every fully determined instance of associativity and
/// distributivity over partially filled tables.
fn partially_consistent(n: usize, add: &[usize], mul: &[usize]) -> bool {
    let a = |x: usize, y: usize| add[x * n + y];
    let m = |x: usize, y: usize| mul[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let axy = a(x, y);
            let mxy = m(x, y);
            for z in 0..n {
                if axy != UNSET && a(y, z) != UNSET {
                    let l = a(axy, z);
                    let r = a(x, a(y, z));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
                if mxy != UNSET && m(y, z) != UNSET {
                    let l = m(mxy, z);
                    let r = m(x, m(y, z));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
                if a(y, z) != UNSET && mxy != UNSET && m(x, z) != UNSET {
                    let l = m(x, a(y, z));
                    let r = a(mxy, m(x, z));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Permutations of 0..n fixing 0 and 1, identity first.
fn stabilizer_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut tail: Vec<usize> = (2..n).collect();
    fn heap(k: usize, tail: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(tail.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, tail, out);
            if k.is_multiple_of(2) {
                tail.swap(i, k - 1);
            } else {
                tail.swap(0, k - 1);
            }
        }
    }
    if tail.is_empty() {
        perms.push(Vec::new());
    } else {
        let k = tail.len();
        heap(k, &mut tail, &mut perms);
    }
    let mut full: Vec<Vec<usize>> = perms
        .into_iter()
        .map(|t| {
            let mut p = vec![0, 1];
            p.truncate(n.min(2));
            p.extend(t);
            p
        })
        .collect();
    full.sort();
    full.dedup();
    full
}

fn permuted_tables(n: usize, perm: &[usize], add: &[usize], mul: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut padd = vec![0; n * n];
    let mut pmul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            padd[perm[x] * n + perm[y]] = perm[add[x * n + y]];
            pmul[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
        }
    }
    (padd, pmul)
}

/// Whether the table pair is the lexicographic minimum of its relabeling
/// orbit.
pub fn is_canonical(n: usize, add: &[usize], mul: &[usize]) -> bool {
    for perm in stabilizer_permutations(n) {
        let (padd, pmul) = permuted_tables(n, &perm, add, mul);
        if (padd.as_slice(), pmul.as_slice()) < (add, mul) {
            return false;
        }
    }
    true
}

/// Every commutative semiring of the given order with element 0 as zero and
/// element 1 as one, in lexicographic table order. With `canonical`, only
/// orbit minima are emitted. `limit` caps the number of emissions.
pub fn search_semirings(
    order: usize,
    canonical: bool,
    limit: Option<usize>,
) -> Result<SearchOutcome, SemiringError> {
    if order == 0 || order > MAX_SEARCH_ORDER {
        return Err(SemiringError::InvalidParam {
            family: "search",
            reason: format!("order must be in 1..={MAX_SEARCH_ORDER}, got {order}"),
        });
    }
    let n = order;
    if n == 1 {
        let s = FiniteSemiring::new("g1_0", labels(1), vec![0], vec![0], 0, 0)
            .expect("trivial semiring is valid");
        return Ok(SearchOutcome { semirings: vec![s], complete: true });
    }

    let mut add = vec![UNSET; n * n];
    let mut mul = vec![UNSET; n * n];
    for x in 0..n {
        add[x] = x;
        add[x * n] = x;
        mul[x * n + 1] = x;
        mul[n + x] = x;
        mul[x * n] = 0;
        mul[x] = 0;
    }

    // Free cells of the upper triangles, addition first.
    let mut cells: Vec<(bool, usize, usize)> = Vec::new();
    for i in 1..n {
        for j in i..n {
            cells.push((true, i, j));
        }
    }
    for i in 2..n {
        for j in i..n {
            cells.push((false, i, j));
        }
    }

    let mut out = Vec::new();
    let mut complete = true;

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        n: usize,
        cells: &[(bool, usize, usize)],
        depth: usize,
        add: &mut Vec<usize>,
        mul: &mut Vec<usize>,
        canonical: bool,
        limit: Option<usize>,
        out: &mut Vec<FiniteSemiring>,
        complete: &mut bool,
    ) {
        if !*complete {
            return;
        }
        if depth == cells.len() {
            if canonical && !is_canonical(n, add, mul) {
                return;
            }
            if limit.is_some_and(|l| out.len() >= l) {
                // A structure was about to be emitted past the limit.
                *complete = false;
                return;
            }
            let s = FiniteSemiring::new(
                format!("g{n}_{}", out.len()),
                labels(n),
                add.clone(),
                mul.clone(),
                0,
                1,
            )
            .expect("fully consistent tables form a semiring");
            out.push(s);
            return;
        }
        let (is_add, i, j) = cells[depth];
        for v in 0..n {
            {
                let t = if is_add { &mut *add } else { &mut *mul };
                t[i * n + j] = v;
                t[j * n + i] = v;
            }
            if partially_consistent(n, add, mul) {
                recurse(n, cells, depth + 1, add, mul, canonical, limit, out, complete);
            }
        }
        let t = if is_add { add } else { mul };
        t[i * n + j] = UNSET;
        t[j * n + i] = UNSET;
    }

    recurse(n, &cells, 0, &mut add, &mut mul, canonical, limit, &mut out, &mut complete);
    Ok(SearchOutcome { semirings: out, complete })
}
