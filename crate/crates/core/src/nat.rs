//! Finitely generated ideals of the natural numbers under ordinary addition
//! and multiplication.
//!
//! Membership is decided exactly: a dynamic-programming window covers an
//! initial segment, and past the window a member is exactly a multiple of the
//! generator gcd. The window bound `(M/d)^2 * d + M` for largest generator
//! `M` and gcd `d` lies past the largest gap of the scaled-down monoid, so
//! the tail rule is exact; tests assert this against a long-range oracle.

use thiserror::Error;

const WINDOW_CAP: u64 = 8_000_000;
const PROVISIONAL_WORK_CAP: u64 = 200_000_000;
const INTERSECTION_CAP: u64 = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NatError {
    #[error("membership window of size {bound} exceeds the resource cap {cap}")]
    WindowTooLarge { bound: u64, cap: u64 },
    #[error("generator preprocessing cost {cost} exceeds the resource cap {cap}")]
    Budget { cost: u64, cap: u64 },
    #[error("intersection scan bound {bound} exceeds the resource cap {cap}")]
    IntersectionTooLarge { bound: u64, cap: u64 },
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A finitely generated ideal of the naturals in canonical form: the unique
/// minimal generating set, plus an exact membership window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatIdeal {
    gens: Vec<u64>,
    gcd: u64,
    bound: u64,
    window: Vec<bool>,
}

fn dp_window(gens: &[u64], len: u64) -> Vec<bool> {
    let len = len as usize;
    let mut w = vec![false; len.max(1)];
    w[0] = true;
    for n in 1..len {
        w[n] = gens.iter().any(|&g| n as u64 >= g && w[n - g as usize]);
    }
    w
}

/// Builds the ideal generated by `gens` (zeros ignored; empty set gives the
/// zero ideal). Canonicalizes to the minimal generating set.
pub fn nat_ideal(gens: &[u64]) -> Result<NatIdeal, NatError> {
    let mut raw: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
    raw.sort_unstable();
    raw.dedup();
    if raw.is_empty() {
        return Ok(NatIdeal { gens: Vec::new(), gcd: 0, bound: 1, window: vec![true] });
    }

    // Provisional window up to the largest raw generator decides minimality:
    // a generator is redundant exactly when it splits into two nonzero
    // members, and both halves are smaller than it.
    let max_raw = *raw.last().expect("nonempty");
    let provisional_cost = (max_raw + 1) * raw.len() as u64;
    if provisional_cost > PROVISIONAL_WORK_CAP {
        return Err(NatError::Budget { cost: provisional_cost, cap: PROVISIONAL_WORK_CAP });
    }
    let provisional = dp_window(&raw, max_raw + 1);
    let gens: Vec<u64> = raw
        .iter()
        .copied()
        .filter(|&g| !(1..g).any(|a| provisional[a as usize] && provisional[(g - a) as usize]))
        .collect();

    let d = gens.iter().copied().fold(0, gcd);
    let m_scaled = gens.last().expect("nonempty") / d;
    let bound = (m_scaled * m_scaled + m_scaled) * d;
    if bound > WINDOW_CAP {
        return Err(NatError::WindowTooLarge { bound, cap: WINDOW_CAP });
    }
    let window = dp_window(&gens, bound);

    #[cfg(debug_assertions)]
    {
        let extended = dp_window(&gens, bound + 3 * gens.last().expect("nonempty"));
        for (n, &m) in extended.iter().enumerate().skip(bound as usize) {
            debug_assert_eq!(m, (n as u64).is_multiple_of(d), "tail rule must be exact at {n}");
        }
    }

    Ok(NatIdeal { gens, gcd: d, bound, window })
}

impl NatIdeal {
    pub fn zero() -> NatIdeal {
        nat_ideal(&[]).expect("zero ideal is always representable")
    }

    /// Minimal generators, ascending. Empty for the zero ideal.
    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// Gcd of the generators; 0 for the zero ideal.
    pub fn generator_gcd(&self) -> u64 {
        self.gcd
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        if n < self.bound {
            self.window[n as usize]
        } else {
            self.gcd != 0 && n.is_multiple_of(self.gcd)
        }
    }

    /// End of the explicit window; membership beyond is multiples of the gcd.
    pub fn window_bound(&self) -> u64 {
        self.bound
    }

    /// Least subtractive ideal containing this one: the multiples of the
    /// generator gcd.
    pub fn subtractive_closure(&self) -> NatIdeal {
        if self.is_zero() {
            NatIdeal::zero()
        } else {
            nat_ideal(&[self.gcd]).expect("single small generator")
        }
    }

    /// First (x, y) in y-then-x order with x and x + y members but y outside.
    pub fn subtractive_failure(&self) -> Option<(u64, u64)> {
        // Nonmembers at or past the window are not divisible by the gcd and
        // can never be completed into a member, so the scan below is complete.
        let x_limit = self.bound + self.gcd;
        for y in 1..self.bound {
            if self.contains(y) || self.gcd == 0 || y % self.gcd != 0 {
                continue;
            }
            for x in 0..=x_limit {
                if self.contains(x) && self.contains(x + y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_subtractive(&self) -> bool {
        let fixed = self.subtractive_closure() == *self;
        debug_assert_eq!(fixed, self.subtractive_failure().is_none());
        fixed
    }

    /// Elementwise sum, which is also the ideal generated by both generator
    /// sets together.
    pub fn sum(&self, other: &NatIdeal) -> Result<NatIdeal, NatError> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        nat_ideal(&gens)
    }

    /// Ideal generated by all pairwise products.
    pub fn product(&self, other: &NatIdeal) -> Result<NatIdeal, NatError> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                gens.push(a * b);
            }
        }
        nat_ideal(&gens)
    }

    pub fn intersection(&self, other: &NatIdeal) -> Result<NatIdeal, NatError> {
        if self.is_zero() || other.is_zero() {
            return Ok(NatIdeal::zero());
        }
        if self == other {
            return Ok(self.clone());
        }
        // Past both windows the intersection is the multiples of
        // lcm(d1, d2); every member beyond 2*maxB + lcm splits off a fixed
        // multiple of the lcm, so all minimal generators lie below that.
        let l = self.gcd / gcd(self.gcd, other.gcd) * other.gcd;
        let scan = 2 * self.bound.max(other.bound) + l;
        if scan > INTERSECTION_CAP {
            return Err(NatError::IntersectionTooLarge { bound: scan, cap: INTERSECTION_CAP });
        }
        let both = |n: u64| self.contains(n) && other.contains(n);
        let mut gens = Vec::new();
        for m in 1..=scan {
            if both(m) && !(1..=m / 2).any(|a| both(a) && both(m - a)) {
                gens.push(m);
            }
        }
        nat_ideal(&gens)
    }

    /// Elements with some positive power inside the ideal.
    pub fn radical(&self) -> NatIdeal {
        if self.is_zero() {
            return NatIdeal::zero();
        }
        // A positive power of x lands on a multiple of d exactly when every
        // prime of d divides x, so the radical is generated by that prime
        // product, except that nothing but 1 itself ever powers into 1.
        let mut rad = 1u64;
        let mut d = self.gcd;
        let mut p = 2u64;
        while p * p <= d {
            if d.is_multiple_of(p) {
                rad *= p;
                while d.is_multiple_of(p) {
                    d /= p;
                }
            }
            p += 1;
        }
        if d > 1 {
            rad *= d;
        }
        let gens: &[u64] = if rad >= 2 {
            &[rad]
        } else if self.contains(1) {
            &[1]
        } else {
            &[2, 3]
        };
        nat_ideal(gens).expect("small radical generators")
    }

    /// Renders generators, leading members, and the eventual pattern, e.g.
    /// `<2,3> = {0,2,3,4,...} (cofinite, missing {1})`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "<> = {0}".into();
        }
        let gens: Vec<String> = self.gens.iter().map(u64::to_string).collect();
        let members: Vec<String> =
            (0..).filter(|&n| self.contains(n)).take(4).map(|n| n.to_string()).collect();
        let missing: Vec<String> = (1..self.bound)
            .filter(|&n| n % self.gcd == 0 && !self.contains(n))
            .map(|n| n.to_string())
            .collect();
        let pattern = match (self.gcd, missing.is_empty()) {
            (1, true) => "all naturals".to_string(),
            (1, false) => format!("cofinite, missing {{{}}}", missing.join(",")),
            (d, true) => format!("multiples of {d}"),
            (d, false) => format!("multiples of {d}, missing {{{}}}", missing.join(",")),
        };
        format!("<{}> = {{{},...}} ({})", gens.join(","), members.join(","), pattern)
    }
}
