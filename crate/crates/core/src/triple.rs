//! Parameterized triples (x, y, z) with x² + y² = zʳ.
//!
//! For coprime s, t of opposite parity,
//!
//! * x = Σ_{k} (−1)^k C(r, 2k) s^{r−2k} t^{2k},
//! * y = Σ_{k} (−1)^k C(r, 2k+1) s^{r−2k−1} t^{2k+1},
//! * z = s² + t²,
//!
//! which specializes to (s²−t², 2st, s²+t²) for r = 2 and to
//! (s(s²−3t²), t(3s²−t²), s²+t²) for r = 3. Parameters are valid exactly
//! when both x and y come out positive; the identity x² + y² = zʳ and
//! gcd(x, y, z) = 1 are asserted on every constructed triple.

use crate::error::{Error, Result};
use crate::semigroup::{gcd, GeneratorSet};

/// Largest supported s or t. Keeps every homogeneous sign evaluation and
/// the zʳ identity check inside checked 128-bit arithmetic for r ≤ 5.
pub const MAX_PARAM: u64 = 1_000_000;

/// Validated (s, t, r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleParams {
    s: u64,
    t: u64,
    r: u32,
}

impl TripleParams {
    pub fn new(s: u64, t: u64, r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::DomainViolation(format!("r must be >= 2, got {r}")));
        }
        if s == 0 || t == 0 {
            return Err(Error::DomainViolation("s and t must be positive".into()));
        }
        if s > MAX_PARAM || t > MAX_PARAM {
            return Err(Error::DomainViolation(format!(
                "s and t must be <= {MAX_PARAM}"
            )));
        }
        let g = gcd(s, t);
        if g != 1 {
            return Err(Error::NotCoprime {
                what: format!("(s,t)=({s},{t})"),
                gcd: g,
            });
        }
        if s % 2 == t % 2 {
            return Err(Error::ParityViolation { s, t });
        }
        let params = TripleParams { s, t, r };
        let (x, y, _) = raw_xyz(&params)?;
        if x <= 0 {
            return Err(Error::DomainViolation(format!(
                "x = {x} <= 0: s/t outside the validity domain for r={r}"
            )));
        }
        if y <= 0 {
            return Err(Error::DomainViolation(format!(
                "y = {y} <= 0: s/t outside the validity domain for r={r}"
            )));
        }
        Ok(params)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

impl std::fmt::Display for TripleParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(s,t,r)=({},{},{})", self.s, self.t, self.r)
    }
}

/// Relative order of x, y, z, smallest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleOrdering {
    XYZ,
    XZY,
    YXZ,
    YZX,
    ZXY,
    ZYX,
}

impl std::fmt::Display for TripleOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TripleOrdering::XYZ => "x<y<z",
            TripleOrdering::XZY => "x<z<y",
            TripleOrdering::YXZ => "y<x<z",
            TripleOrdering::YZX => "y<z<x",
            TripleOrdering::ZXY => "z<x<y",
            TripleOrdering::ZYX => "z<y<x",
        };
        f.write_str(s)
    }
}

/// A concrete solution of x² + y² = zʳ together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub x: i128,
    pub y: i128,
    pub z: i128,
    pub params: TripleParams,
    pub ordering: TripleOrdering,
}

impl Triple {
    /// Generators sorted ascending, as a semigroup generator set.
    pub fn generator_set(&self) -> Result<GeneratorSet> {
        let to_u64 = |v: i128| u64::try_from(v).map_err(|_| Error::Overflow("generator size"));
        GeneratorSet::new([to_u64(self.x)?, to_u64(self.y)?, to_u64(self.z)?])
    }

    /// The smallest generator (the Apéry modulus).
    pub fn min_gen(&self) -> i128 {
        self.x.min(self.y).min(self.z)
    }
}

fn checked_pow(base: i128, exp: u32) -> Result<i128> {
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(Error::Overflow("power"))?;
    }
    Ok(acc)
}

fn binomial(n: u32, k: u32) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let mut acc: i128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or(Error::Overflow("binomial"))?;
        acc /= (i + 1) as i128;
    }
    Ok(acc)
}

/// x, y, z as signed values, before any positivity requirement.
fn raw_xyz(params: &TripleParams) -> Result<(i128, i128, i128)> {
    let (s, t, r) = (params.s as i128, params.t as i128, params.r);
    let mut x: i128 = 0;
    for k in 0..=(r / 2) {
        let term = binomial(r, 2 * k)?
            .checked_mul(checked_pow(s, r - 2 * k)?)
            .and_then(|v| v.checked_mul(checked_pow(t, 2 * k).ok()?))
            .ok_or(Error::Overflow("x term"))?;
        x = if k % 2 == 0 {
            x.checked_add(term)
        } else {
            x.checked_sub(term)
        }
        .ok_or(Error::Overflow("x sum"))?;
    }
    let mut y: i128 = 0;
    for k in 0..=((r - 1) / 2) {
        let term = binomial(r, 2 * k + 1)?
            .checked_mul(checked_pow(s, r - 2 * k - 1)?)
            .and_then(|v| v.checked_mul(checked_pow(t, 2 * k + 1).ok()?))
            .ok_or(Error::Overflow("y term"))?;
        y = if k % 2 == 0 {
            y.checked_add(term)
        } else {
            y.checked_sub(term)
        }
        .ok_or(Error::Overflow("y sum"))?;
    }
    let z = s * s + t * t;
    Ok((x, y, z))
}

fn gcd3(a: i128, b: i128, c: i128) -> u64 {
    let g = gcd(a.unsigned_abs() as u64, b.unsigned_abs() as u64);
    gcd(g, c.unsigned_abs() as u64)
}

/// Builds the triple for validated parameters, asserting x² + y² = zʳ,
/// positivity, primitivity and distinctness.
pub fn general_xyz(params: &TripleParams) -> Result<Triple> {
    let (x, y, z) = raw_xyz(params)?;
    if x <= 0 || y <= 0 {
        return Err(Error::DomainViolation(format!(
            "({x},{y},{z}) has a nonpositive member"
        )));
    }
    let lhs = x
        .checked_mul(x)
        .and_then(|xx| y.checked_mul(y).and_then(|yy| xx.checked_add(yy)))
        .ok_or(Error::Overflow("x^2+y^2"))?;
    if lhs != checked_pow(z, params.r)? {
        return Err(Error::FormulaMismatch(format!(
            "x^2+y^2 != z^r for {params}"
        )));
    }
    if x.unsigned_abs() > u64::MAX as u128 || y.unsigned_abs() > u64::MAX as u128 {
        return Err(Error::Overflow("triple member exceeds 64 bits"));
    }
    let g = gcd3(x, y, z);
    if g != 1 {
        return Err(Error::CommonFactor(g));
    }
    let ordering = ordering_of_values(x, y, z)?;
    Ok(Triple {
        x,
        y,
        z,
        params: *params,
        ordering,
    })
}

fn ordering_of_values(x: i128, y: i128, z: i128) -> Result<TripleOrdering> {
    if x == y || y == z || x == z {
        // Impossible for a primitive triple with z >= 5; fail loudly.
        return Err(Error::FormulaMismatch(format!(
            "tie among triple members ({x},{y},{z})"
        )));
    }
    Ok(match (x < y, y < z, x < z) {
        (true, true, _) => TripleOrdering::XYZ,
        (true, false, true) => TripleOrdering::XZY,
        (true, false, false) => TripleOrdering::ZXY,
        (false, true, true) => TripleOrdering::YXZ,
        (false, true, false) => TripleOrdering::YZX,
        (false, false, _) => TripleOrdering::ZYX,
    })
}

/// Sorted relation among x, y, z, by exact comparison.
pub fn ordering_of(triple: &Triple) -> TripleOrdering {
    triple.ordering
}

/// Every valid (s, t) for the given r with s² + t² ≤ z_max, in
/// lexicographic order. Validity is the full [`TripleParams::new`] check
/// plus a constructible primitive triple.
pub fn enumerate_params(r: u32, z_max: u64) -> Vec<TripleParams> {
    let mut out = Vec::new();
    let mut s = 1u64;
    while s * s < z_max {
        let mut t = 1u64;
        while s * s + t * t <= z_max {
            if let Ok(params) = TripleParams::new(s, t, r) {
                if general_xyz(&params).is_ok() {
                    out.push(params);
                }
            }
            t += 1;
        }
        s += 1;
    }
    out
}
