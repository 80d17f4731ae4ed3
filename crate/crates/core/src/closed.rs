//! Closed-form evaluation of g₀, n₀ and g₁ for the triple families, plus
//! Apéry-table corner data.
//!
//! Every closed-form regime is a data entry: the L-shaped (or single-row)
//! Apéry table of the regime, expressed by its two block extents in the
//! regime's coordinate system, and which corner carries the maximum. The
//! Frobenius number is the winning corner value minus the smallest
//! generator; the genus is the exact block sum pushed through the Apéry
//! formulas. The published expanded polynomials are asserted against this
//! corner form in the tests.
//!
//! The irregular r = 3 region (x < z) has no uniform table; there the
//! staircase is reconstructed from the generic engine by decomposing each
//! Apéry element as Z·z + Y·y and reading off the outer corners.

use crate::algebra::{classify_regime, RegimeCase, RegimeLabel};
use crate::error::{Error, Result};
use crate::semigroup::{p_apery_set_with, EngineOptions};
use crate::triple::{general_xyz, Triple, TripleParams};

/// Which pair of generators spans the table axes: a point (U, V) is the
/// value U·first + V·second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axes {
    /// (X, Y): U·x + V·y.
    XY,
    /// (Y, X): U·y + V·x.
    YX,
    /// (Z, Y): U·z + V·y (irregular region).
    ZY,
}

impl Axes {
    /// The generator pair (first, second) for these axes.
    pub fn generators(self, t: &Triple) -> (i128, i128) {
        match self {
            Axes::XY => (t.x, t.y),
            Axes::YX => (t.y, t.x),
            Axes::ZY => (t.z, t.y),
        }
    }

    pub fn labels(self) -> (&'static str, &'static str) {
        match self {
            Axes::XY => ("x", "y"),
            Axes::YX => ("y", "x"),
            Axes::ZY => ("z", "y"),
        }
    }

    /// The remaining generator: the Apéry modulus of the table.
    pub fn modulus(self, t: &Triple) -> i128 {
        match self {
            Axes::XY | Axes::YX => t.z,
            Axes::ZY => t.x,
        }
    }
}

/// An L-shaped table: rows 0..h1 have width w1, rows h1..h2 have width w2.
/// h2 = h1 degenerates to a single block; the extents may also cross
/// (w-part formally negative) in thin slices of a regime, where the block
/// sums remain valid as signed algebra. The area identity
/// w1·h1 + w2·(h2−h1) = a₁ holds for every cataloged shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LShape {
    pub w1: i128,
    pub h1: i128,
    pub w2: i128,
    pub h2: i128,
}

impl LShape {
    pub fn area(&self) -> i128 {
        self.w1 * self.h1 + self.w2 * (self.h2 - self.h1)
    }

    /// Outer (wide) corner.
    pub fn outer(&self) -> (i128, i128) {
        (self.w1 - 1, self.h1 - 1)
    }

    /// Inner (tall) corner, when the second block is real.
    pub fn inner(&self) -> Option<(i128, i128)> {
        if self.h2 > self.h1 && self.w2 > 0 {
            Some((self.w2 - 1, self.h2 - 1))
        } else {
            None
        }
    }
}

/// Which corner the theorem designates as the Apéry maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Outer,
    Inner,
}

/// Geometry of one cataloged case.
#[derive(Debug, Clone)]
pub enum Geometry {
    /// Full table shape: supports both g and the genus sum.
    Table { shape: LShape, winner: Winner },
    /// Corner candidates only (r = 2 and the p = 1 cases): supports g.
    Corners {
        candidates: Vec<(i128, i128)>,
        winner: usize,
    },
}

pub struct CaseData {
    pub r: u32,
    pub id: &'static str,
    pub axes: Axes,
    build: fn(i128, i128) -> Geometry,
}

impl CaseData {
    pub fn geometry(&self, params: &TripleParams) -> Geometry {
        (self.build)(params.s() as i128, params.t() as i128)
    }
}

fn table(w1: i128, h1: i128, w2: i128, h2: i128, winner: Winner) -> Geometry {
    Geometry::Table {
        shape: LShape { w1, h1, w2, h2 },
        winner,
    }
}

/// The formula catalog: one entry per regime id, keyed by the ids issued
/// by [`classify_regime`]. Shapes transcribe the per-regime Apéry tables;
/// adding a case is a table edit.
static CASES: &[CaseData] = &[
    // r = 2: no table is published, only the corner (s-1, s-1).
    CaseData {
        r: 2,
        id: "s > t",
        axes: Axes::XY,
        build: |s, _| Geometry::Corners {
            candidates: vec![(s - 1, s - 1)],
            winner: 0,
        },
    },
    // r = 3.
    CaseData {
        r: 3,
        id: "s > (2+sqrt3)t",
        axes: Axes::YX,
        build: |s, t| table(s, s, t, s + t, Winner::Outer),
    },
    CaseData {
        r: 3,
        id: "(1+sqrt2)t < s < (2+sqrt3)t",
        axes: Axes::XY,
        build: |s, t| table(s + t, t, s, s, Winner::Inner),
    },
    CaseData {
        r: 3,
        id: "2t < s < (1+sqrt2)t",
        axes: Axes::XY,
        build: |s, t| table(2 * s + t, t, s, s - t, Winner::Outer),
    },
    CaseData {
        r: 3,
        id: "(2+sqrt13)t/3 < s < 2t",
        axes: Axes::XY,
        build: |s, t| table(3 * s + 2 * t, 2 * t - s, 2 * s + t, s - t, Winner::Inner),
    },
    CaseData {
        r: 3,
        id: "1.8139t < s < (2+sqrt13)t/3",
        axes: Axes::XY,
        build: |s, t| table(5 * s + 3 * t, 2 * t - s, 2 * s + t, 2 * s - 3 * t, Winner::Outer),
    },
    CaseData {
        r: 3,
        id: "(3+sqrt34)t/5 < s < 1.8139t",
        axes: Axes::XY,
        build: |s, t| table(5 * s + 3 * t, 2 * t - s, 2 * s + t, 2 * s - 3 * t, Winner::Inner),
    },
    CaseData {
        r: 3,
        id: "sqrt3 t < s < (3+sqrt34)t/5",
        axes: Axes::XY,
        build: |s, t| table(7 * s + 4 * t, 2 * t - s, 2 * s + t, 3 * s - 5 * t, Winner::Outer),
    },
    // r = 3, p = 1: the four candidate cells of the level-1 table.
    CaseData {
        r: 3,
        id: "(1+sqrt2)t < s < 3.5163t [p=1]",
        axes: Axes::XY,
        build: |s, t| Geometry::Corners {
            candidates: p1_candidates(s, t),
            winner: 0,
        },
    },
    CaseData {
        r: 3,
        id: "3.5163t < s < (2+sqrt3)t [p=1]",
        axes: Axes::XY,
        build: |s, t| Geometry::Corners {
            candidates: p1_candidates(s, t),
            winner: 3,
        },
    },
    // r = 4.
    CaseData {
        r: 4,
        id: "s > (1+sqrt2+sqrt(2(2+sqrt2)))t",
        axes: Axes::YX,
        build: |s, t| table(s, s, t, s + t, Winner::Outer),
    },
    CaseData {
        r: 4,
        id: "(2+sqrt3)t < s < (1+sqrt2+sqrt(2(2+sqrt2)))t",
        axes: Axes::XY,
        build: |s, t| table(s + t, t, s, s, Winner::Inner),
    },
    CaseData {
        r: 4,
        id: "2.8350t < s < (2+sqrt3)t",
        axes: Axes::XY,
        build: |s, t| table(2 * s + t, t, s, s - t, Winner::Outer),
    },
    CaseData {
        r: 4,
        id: "2.5855t < s < 2.8350t",
        axes: Axes::XY,
        build: |s, t| table(2 * s + t, t, s, s - t, Winner::Inner),
    },
    CaseData {
        r: 4,
        id: "(1+sqrt2)t < s < 2.5855t",
        axes: Axes::XY,
        build: |s, t| table(5 * s + 2 * t, 3 * t - s, 3 * s + t, s - 2 * t, Winner::Outer),
    },
    // r = 5, upper branch.
    CaseData {
        r: 5,
        id: "s > (1+sqrt5+sqrt(5+2sqrt5))t",
        axes: Axes::YX,
        build: |s, t| table(s, s, t, s + t, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "(1+sqrt2+sqrt(2(2+sqrt2)))t < s < (1+sqrt5+sqrt(5+2sqrt5))t",
        axes: Axes::XY,
        build: |s, t| table(s + t, t, s, s, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "4.1894t < s < (1+sqrt2+sqrt(2(2+sqrt2)))t",
        axes: Axes::XY,
        build: |s, t| table(2 * s + t, t, s, s - t, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "(1+sqrt5+sqrt(2(5+sqrt5)))t/2 < s < 4.1894t",
        axes: Axes::XY,
        build: |s, t| table(2 * s + t, t, s, s - t, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "3.1098t < s < (1+sqrt5+sqrt(2(5+sqrt5)))t/2",
        axes: Axes::XY,
        build: |s, t| table(3 * s + t, t, s, s - 2 * t, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "3.0976t < s < 3.1098t",
        axes: Axes::XY,
        build: |s, t| table(3 * s + t, t, s, s - 2 * t, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "sqrt(5+2sqrt5)t < s < 3.0976t",
        axes: Axes::XY,
        build: |s, t| table(s * s + t * t, 1, 0, 1, Winner::Outer),
    },
    // r = 5, lower branch.
    CaseData {
        r: 5,
        id: "0.3228t < s < sqrt(1-2/sqrt5)t",
        axes: Axes::YX,
        build: |s, t| table(s * s + t * t, 1, 0, 1, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "0.3215t < s < 0.3228t",
        axes: Axes::YX,
        build: |s, t| table(s + 3 * t, s, t, t - 2 * s, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "0.2840t < s < 0.3215t",
        axes: Axes::YX,
        build: |s, t| table(s + 3 * t, s, t, t - 2 * s, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "0.2386t < s < 0.2840t",
        axes: Axes::YX,
        build: |s, t| table(s + 2 * t, s, t, t - s, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "0.1989t < s < 0.2386t",
        axes: Axes::YX,
        build: |s, t| table(s + 2 * t, s, t, t - s, Winner::Outer),
    },
    CaseData {
        r: 5,
        id: "(1+sqrt5-sqrt(5+2sqrt5))t < s < 0.1989t",
        axes: Axes::YX,
        build: |s, t| table(s + t, s, t, t, Winner::Inner),
    },
    CaseData {
        r: 5,
        id: "0 < s < (1+sqrt5-sqrt(5+2sqrt5))t",
        axes: Axes::XY,
        build: |s, t| table(t, t, s, s + t, Winner::Outer),
    },
];

/// Candidate maxima of the level-1 Apéry table for
/// (1+√2)t < s < (2+√3)t, r = 3.
fn p1_candidates(s: i128, t: i128) -> Vec<(i128, i128)> {
    vec![
        (s - t - 1, 2 * s - t - 1),
        (s - 1, 2 * s + t - 1),
        (s + t - 1, 2 * s - 1),
        (2 * s + t - 1, t - 1),
    ]
}

pub fn case_data(r: u32, id: &str) -> Option<&'static CaseData> {
    CASES.iter().find(|c| c.r == r && c.id == id)
}

pub fn all_cases() -> &'static [CaseData] {
    CASES
}

/// Evaluated closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub value: i128,
    pub case: RegimeLabel,
    /// The corner the value came from, in the case's coordinate system.
    pub corner: Option<(i128, i128)>,
    /// Human-readable instantiation.
    pub formula: String,
}

fn corner_value(corner: (i128, i128), gens: (i128, i128)) -> Result<i128> {
    let (u, v) = corner;
    let (gu, gv) = gens;
    u.checked_mul(gu)
        .and_then(|a| v.checked_mul(gv).and_then(|b| a.checked_add(b)))
        .ok_or(Error::Overflow("corner value"))
}

fn classified_case(params: &TripleParams, p: u32) -> Result<(RegimeLabel, &'static CaseData)> {
    let label = classify_regime(params, p)?;
    match label.case {
        RegimeCase::Catalog(id) => {
            let data = case_data(params.r(), id).ok_or_else(|| {
                Error::FormulaMismatch(format!("regime {id} has no catalog entry"))
            })?;
            Ok((label, data))
        }
        RegimeCase::Irregular => Err(Error::NoClosedForm(format!(
            "{params} lies in the irregular region (x < z); use corner extraction"
        ))),
        RegimeCase::Boundary => Err(Error::NoClosedForm(format!(
            "{params} sits exactly on a regime boundary; use the generic engine"
        ))),
        RegimeCase::UnexpectedOrdering => Err(Error::NoClosedForm(format!(
            "{params} has z above another member; no closed form is known"
        ))),
    }
}

fn winning_corner(
    geometry: &Geometry,
    gens: (i128, i128),
) -> Result<((i128, i128), i128)> {
    match geometry {
        Geometry::Table { shape, winner } => {
            let outer = shape.outer();
            let outer_val = corner_value(outer, gens)?;
            // The companion corner of the designated one; shapes can be
            // degenerate in thin slices, so fall back to the raw cell.
            let inner = shape.inner().unwrap_or((shape.w2 - 1, shape.h2 - 1));
            let inner_val = corner_value(inner, gens)?;
            let (corner, val, other) = match winner {
                Winner::Outer => (outer, outer_val, inner_val),
                Winner::Inner => (inner, inner_val, outer_val),
            };
            if val < other {
                return Err(Error::FormulaMismatch(format!(
                    "designated corner {corner:?} is not maximal"
                )));
            }
            Ok((corner, val))
        }
        Geometry::Corners { candidates, winner } => {
            let corner = candidates[*winner];
            let val = corner_value(corner, gens)?;
            for c in candidates {
                if corner_value(*c, gens)? > val {
                    return Err(Error::FormulaMismatch(format!(
                        "designated corner {corner:?} is beaten by {c:?}"
                    )));
                }
            }
            Ok((corner, val))
        }
    }
}

fn closed_frobenius(params: &TripleParams, p: u32) -> Result<ClosedFormResult> {
    let (label, data) = classified_case(params, p)?;
    let triple = general_xyz(params)?;
    let gens = data.axes.generators(&triple);
    // Every published case subtracts z (= the least generator wherever a
    // table backs the case; for r = 2 the formula subtracts z outright).
    let modulus = data.axes.modulus(&triple);
    let geometry = data.geometry(params);
    if let Geometry::Table { shape, .. } = &geometry {
        if modulus != triple.min_gen() {
            return Err(Error::FormulaMismatch(format!(
                "case {} table modulus {modulus} is not the least generator",
                data.id
            )));
        }
        if shape.area() != modulus {
            return Err(Error::FormulaMismatch(format!(
                "case {}: table area {} != a1 {modulus}",
                data.id,
                shape.area()
            )));
        }
    }
    let (corner, val) = winning_corner(&geometry, gens)?;
    let value = val
        .checked_sub(modulus)
        .ok_or(Error::Overflow("frobenius value"))?;
    let (lu, lv) = data.axes.labels();
    let (gu, gv) = gens;
    let formula = format!(
        "{}*{lu} + {}*{lv} - a1 = {}*{gu} + {}*{gv} - {modulus} = {value}",
        corner.0, corner.1, corner.0, corner.1
    );
    Ok(ClosedFormResult {
        value,
        case: label,
        corner: Some(corner),
        formula,
    })
}

/// Closed-form Frobenius number g₀ for a classified non-irregular,
/// non-boundary regime (r = 2..5).
pub fn g0_closed(params: &TripleParams) -> Result<ClosedFormResult> {
    closed_frobenius(params, 0)
}

/// Closed-form g₁, available for r = 3 in (1+√2)t < s < (2+√3)t.
pub fn g1_closed(params: &TripleParams) -> Result<ClosedFormResult> {
    closed_frobenius(params, 1)
}

fn tri(n: i128) -> i128 {
    n * (n - 1) / 2
}

/// Sum of all table cell values X·gu + Y·gv over the L-shape (exact,
/// signed block algebra).
fn table_sum(shape: &LShape, gens: (i128, i128)) -> Result<i128> {
    let (gu, gv) = gens;
    let LShape { w1, h1, w2, h2 } = *shape;
    let u_part = h1
        .checked_mul(tri(w1))
        .and_then(|a| (h2 - h1).checked_mul(tri(w2)).and_then(|b| a.checked_add(b)))
        .and_then(|v| v.checked_mul(gu))
        .ok_or(Error::Overflow("table sum"))?;
    let v_part = w1
        .checked_mul(tri(h1))
        .and_then(|a| {
            w2.checked_mul(tri(h2) - tri(h1))
                .and_then(|b| a.checked_add(b))
        })
        .and_then(|v| v.checked_mul(gv))
        .ok_or(Error::Overflow("table sum"))?;
    u_part.checked_add(v_part).ok_or(Error::Overflow("table sum"))
}

/// Closed-form genus n₀.
///
/// Regular regimes evaluate the exact Apéry-table sum of their case; the
/// r = 2 family has no published genus form. In the irregular r = 3
/// region the single-row shape (and only it) admits (x−1)(z−1)/2, decided
/// by generic corner extraction, which is why this operation takes engine
/// options.
pub fn n0_closed(params: &TripleParams, opts: &EngineOptions) -> Result<ClosedFormResult> {
    let label = classify_regime(params, 0)?;
    if label.case == RegimeCase::Irregular {
        let spec = extract_staircase(params, 0, opts)?;
        let triple = general_xyz(params)?;
        if let [(z0, 0)] = spec.corners.as_slice() {
            if *z0 + 1 != triple.x {
                return Err(Error::FormulaMismatch(format!(
                    "single-row width {} != x {}",
                    z0 + 1,
                    triple.x
                )));
            }
            let value = (triple.x - 1) * (triple.z - 1) / 2;
            return Ok(ClosedFormResult {
                value,
                case: label,
                corner: Some((*z0, 0)),
                formula: format!("(x-1)(z-1)/2 = {value}"),
            });
        }
        return Err(Error::NoClosedForm(format!(
            "{params}: irregular staircase has no genus closed form"
        )));
    }
    let (label, data) = classified_case(params, 0)?;
    let triple = general_xyz(params)?;
    let Geometry::Table { shape, .. } = data.geometry(params) else {
        return Err(Error::NoClosedForm(format!(
            "case {} has no published genus form",
            data.id
        )));
    };
    let gens = data.axes.generators(&triple);
    let a1 = data.axes.modulus(&triple);
    if shape.area() != a1 {
        return Err(Error::FormulaMismatch(format!(
            "case {}: table area {} != a1 {a1}",
            data.id,
            shape.area()
        )));
    }
    let sum = table_sum(&shape, gens)?;
    // n = sum/a1 - (a1-1)/2; evenness is asserted, a failure means the
    // catalog mistranscribes the table.
    let num = 2i128
        .checked_mul(sum)
        .and_then(|v| v.checked_sub(a1 * (a1 - 1)))
        .ok_or(Error::Overflow("genus numerator"))?;
    if num % (2 * a1) != 0 {
        return Err(Error::InexactDivision("closed genus formula"));
    }
    let value = num / (2 * a1);
    Ok(ClosedFormResult {
        value,
        case: label,
        corner: None,
        formula: format!("table sum {sum} / a1 {a1} - (a1-1)/2 = {value}"),
    })
}

/// Corner data of an Apéry table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSpec {
    pub axes: Axes,
    /// Maximal staircase points, ordered by increasing second coordinate.
    pub corners: Vec<(i128, i128)>,
    /// Analytic L-shape, for cataloged regimes.
    pub shape: Option<LShape>,
    /// Extracted row widths (index = second coordinate), for the
    /// irregular region.
    pub row_widths: Option<Vec<i128>>,
}

impl CornerSpec {
    /// Number of cells; equals a₁ for every valid table.
    pub fn area(&self) -> Option<i128> {
        if let Some(shape) = &self.shape {
            Some(shape.area())
        } else {
            self.row_widths.as_ref().map(|w| w.iter().sum())
        }
    }
}

/// Corner data for a parameterized triple at level p.
///
/// Cataloged regimes answer analytically. The irregular r = 3 region
/// reconstructs the staircase from the generic p-Apéry set.
pub fn apery_corners(params: &TripleParams, p: u32, opts: &EngineOptions) -> Result<CornerSpec> {
    let label = classify_regime(params, p)?;
    match label.case {
        RegimeCase::Catalog(id) => {
            let data = case_data(params.r(), id).ok_or_else(|| {
                Error::FormulaMismatch(format!("regime {id} has no catalog entry"))
            })?;
            match data.geometry(params) {
                Geometry::Table { shape, .. } => {
                    let mut corners = vec![shape.outer()];
                    if let Some(inner) = shape.inner() {
                        corners.push(inner);
                    }
                    Ok(CornerSpec {
                        axes: data.axes,
                        corners,
                        shape: Some(shape),
                        row_widths: None,
                    })
                }
                Geometry::Corners { candidates, winner } => Ok(CornerSpec {
                    axes: data.axes,
                    corners: vec![candidates[winner]],
                    shape: None,
                    row_widths: None,
                }),
            }
        }
        RegimeCase::Irregular => extract_staircase(params, p, opts),
        RegimeCase::Boundary | RegimeCase::UnexpectedOrdering => Err(Error::NoClosedForm(
            format!("{params}: no table shape is known ({})", label.case_id()),
        )),
    }
}

/// Reconstructs the irregular-region staircase from the generic p-Apéry
/// set: every Apéry element is written as Z·z + Y·y (minimal Y, hence
/// maximal Z), rows must be solid and nonincreasing, and the outer
/// corners of the staircase are reported.
pub fn extract_staircase(
    params: &TripleParams,
    p: u32,
    opts: &EngineOptions,
) -> Result<CornerSpec> {
    let triple = general_xyz(params)?;
    if triple.x != triple.min_gen() {
        return Err(Error::NoClosedForm(format!(
            "{params}: staircase extraction expects x to be the least generator"
        )));
    }
    let gens = triple.generator_set()?;
    let ap = p_apery_set_with(&gens, p, opts)?;
    let (y, z) = (triple.y as u64, triple.z as u64);
    let a1 = triple.x;

    let mut rows: Vec<(i128, i128)> = Vec::new(); // (max Z, cell count) per Y
    for &m in ap.values() {
        let mut decomposed = None;
        let mut rest = m;
        let mut yy = 0i128;
        loop {
            if rest % z == 0 {
                decomposed = Some(((rest / z) as i128, yy));
                break;
            }
            if rest < y {
                break;
            }
            rest -= y;
            yy += 1;
        }
        let Some((zc, yc)) = decomposed else {
            return Err(Error::DecompositionFailure { element: m });
        };
        let yc = yc as usize;
        if rows.len() <= yc {
            rows.resize(yc + 1, (-1, 0));
        }
        rows[yc].0 = rows[yc].0.max(zc);
        rows[yc].1 += 1;
    }

    let mut widths = Vec::with_capacity(rows.len());
    let mut prev = i128::MAX;
    for (yc, &(max_z, count)) in rows.iter().enumerate() {
        let width = max_z + 1;
        if width == 0 || count != width {
            return Err(Error::FormulaMismatch(format!(
                "staircase row {yc} is not solid (max Z {max_z}, {count} cells)"
            )));
        }
        if width > prev {
            return Err(Error::FormulaMismatch(format!(
                "staircase row {yc} widens from {prev} to {width}"
            )));
        }
        prev = width;
        widths.push(width);
    }
    let total: i128 = widths.iter().sum();
    if total != a1 {
        return Err(Error::FormulaMismatch(format!(
            "staircase area {total} != a1 {a1}"
        )));
    }

    let mut corners = Vec::new();
    for (yc, &w) in widths.iter().enumerate() {
        let is_corner = match widths.get(yc + 1) {
            Some(&next) => next < w,
            None => true,
        };
        if is_corner {
            corners.push((w - 1, yc as i128));
        }
    }
    Ok(CornerSpec {
        axes: Axes::ZY,
        corners,
        shape: None,
        row_widths: Some(widths),
    })
}

/// g_p read from a corner specification: the largest corner value minus
/// the Apéry modulus.
pub fn corner_frobenius(spec: &CornerSpec, triple: &Triple) -> Result<i128> {
    let gens = spec.axes.generators(triple);
    let a1 = spec.axes.modulus(triple);
    let mut best: Option<i128> = None;
    for &c in &spec.corners {
        let v = corner_value(c, gens)?;
        best = Some(best.map_or(v, |b| b.max(v)));
    }
    let best = best.ok_or_else(|| Error::FormulaMismatch("empty corner set".into()))?;
    Ok(best - a1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{gap_scan_stats, GeneratorSet};

    fn params(s: u64, t: u64, r: u32) -> TripleParams {
        TripleParams::new(s, t, r).unwrap()
    }

    #[test]
    fn every_catalog_regime_has_case_data() {
        for def in crate::algebra::all_regimes() {
            assert!(
                case_data(def.r, def.id).is_some(),
                "missing case data for r={} {}",
                def.r,
                def.id
            );
        }
        for case in all_cases() {
            assert!(
                crate::algebra::all_regimes()
                    .iter()
                    .any(|d| d.r == case.r && d.id == case.id),
                "case r={} {} has no regime interval",
                case.r,
                case.id
            );
        }
    }

    #[test]
    fn g0_paper_examples() {
        // (9,4): (2s+t-1)x + (t-1)y - z = 21*297 + 3*908 - 97.
        let r = g0_closed(&params(9, 4, 3)).unwrap();
        assert_eq!(r.value, 8864);
        assert_eq!(r.corner, Some((21, 3)));

        // (2,1,2): (3,4,5) -> 1*3 + 1*4 - 5 = 2.
        let r = g0_closed(&params(2, 1, 2)).unwrap();
        assert_eq!(r.value, 2);

        // (4,1,3): s > (2+sqrt3)t -> (s-1)(y+x) - z = 3*47 + 3*52 - 17.
        let r = g0_closed(&params(4, 1, 3)).unwrap();
        assert_eq!(r.value, 280);
    }

    #[test]
    fn g0_expanded_theorem_forms() {
        // The theorem states each case as an expanded polynomial; the
        // stored corner form must agree exactly.
        let check = |s: u64, t: u64, r: u32, expect: i128| {
            let got = g0_closed(&params(s, t, r)).unwrap().value;
            assert_eq!(got, expect, "(s,t,r)=({s},{t},{r})");
        };
        let (s, t) = (9i128, 4i128);
        let (x, y, z) = (297i128, 908, 97);
        check(9, 4, 3, (2 * s + t - 1) * x + (t - 1) * y - z);
        let (s, t) = (27i128, 14i128);
        let (x, y, z) = (3807i128, 27874, 925);
        check(27, 14, 3, (2 * s + t - 1) * x + (s - t - 1) * y - z);
        let (s, t) = (24i128, 13i128);
        let (x, y, z) = (1656i128, 20267, 745);
        check(24, 13, 3, (5 * s + 3 * t - 1) * x + (2 * t - s - 1) * y - z);
        let (s, t) = (44i128, 25i128);
        let (x, y, z) = (2684i128, 129575, 2561);
        check(44, 25, 3, (7 * s + 4 * t - 1) * x + (2 * t - s - 1) * y - z);
    }

    #[test]
    fn g1_paper_values() {
        assert_eq!(g1_closed(&params(18, 5, 3)).unwrap().value, 197_871);
        assert_eq!(g1_closed(&params(29, 8, 3)).unwrap().value, 1_360_164);
        // (9,4) falls left of the 3.5163 root:
        // (s-t-1)x + (2s-t-1)y - z = 4*297 + 13*908 - 97.
        let r = g1_closed(&params(9, 4, 3)).unwrap();
        assert_eq!(r.value, 12_895);
        assert_eq!(r.corner, Some((4, 13)));
        // Out of regime.
        assert!(matches!(
            g1_closed(&params(27, 14, 3)),
            Err(Error::NoClosedForm(_))
        ));
    }

    #[test]
    fn n0_paper_examples() {
        let opts = EngineOptions::default();
        // (9,4): 1/2((s-1)x + (t-1)y + st(5s^2-7st-5t^2) + (s^2-1)(t^2-1)).
        assert_eq!(n0_closed(&params(9, 4, 3), &opts).unwrap().value, 4464);
        // (2,1,3): irregular single row, (x-1)(z-1)/2 = 2.
        assert_eq!(n0_closed(&params(2, 1, 3), &opts).unwrap().value, 2);
        // (4,1,3): 144.
        assert_eq!(n0_closed(&params(4, 1, 3), &opts).unwrap().value, 144);
        // r=2 has no published genus form.
        assert!(matches!(
            n0_closed(&params(2, 1, 2), &opts),
            Err(Error::NoClosedForm(_))
        ));
    }

    /// Theorem 4 expanded genus polynomials, per case.
    #[test]
    fn n0_expanded_theorem_forms_r3() {
        let opts = EngineOptions::default();
        let eval = |s: u64, t: u64, which: usize| -> i128 {
            let tr = general_xyz(&params(s, t, 3)).unwrap();
            let (x, y) = (tr.x, tr.y);
            let (s, t) = (s as i128, t as i128);
            let tail = (s * s - 1) * (t * t - 1);
            let num = match which {
                1 => (s - 1) * x + (t - 1) * y + 3 * s * t * (s * s - s * t - t * t) + tail,
                2 => (s - 1) * x + (t - 1) * y + s * t * (5 * s * s - 7 * s * t - 5 * t * t) + tail,
                3 => (s + 1) * x - (5 * t - 1) * y - s * t * (11 * s * s - 21 * s * t - 15 * t * t) + tail,
                4 => (13 * s + 1) * x - (17 * t - 1) * y - s * t * (45 * s * s - 93 * s * t - 49 * t * t) + tail,
                5 => (33 * s + 1) * x - (37 * t - 1) * y - s * t * (99 * s * s - 209 * s * t - 103 * t * t) + tail,
                _ => unreachable!(),
            };
            assert_eq!(num % 2, 0);
            num / 2
        };
        // case 1: s > (1+sqrt2)t, both orientations.
        assert_eq!(n0_closed(&params(4, 1, 3), &opts).unwrap().value, eval(4, 1, 1));
        assert_eq!(n0_closed(&params(7, 2, 3), &opts).unwrap().value, eval(7, 2, 1));
        // case 2: 2t < s < (1+sqrt2)t.
        assert_eq!(n0_closed(&params(9, 4, 3), &opts).unwrap().value, eval(9, 4, 2));
        // case 3: (2+sqrt13)t/3 < s < 2t.
        assert_eq!(n0_closed(&params(27, 14, 3), &opts).unwrap().value, eval(27, 14, 3));
        // case 4: (3+sqrt34)t/5 < s < (2+sqrt13)t/3 (both winner slices).
        assert_eq!(n0_closed(&params(24, 13, 3), &opts).unwrap().value, eval(24, 13, 4));
        assert_eq!(n0_closed(&params(53, 30, 3), &opts).unwrap().value, eval(53, 30, 4));
        // case 5: sqrt3 t < s < (3+sqrt34)t/5.
        assert_eq!(n0_closed(&params(44, 25, 3), &opts).unwrap().value, eval(44, 25, 5));
    }

    #[test]
    fn irregular_corners_paper_list() {
        let opts = EngineOptions::default();
        let corners = |s, t| {
            extract_staircase(&params(s, t, 3), 0, &opts)
                .unwrap()
                .corners
        };
        assert_eq!(corners(11, 6), vec![(37, 2), (28, 3)]);
        assert_eq!(corners(16, 9), vec![(61, 2), (10, 4)]);
        assert_eq!(corners(30, 17), vec![(201, 0), (196, 4)]);
        assert_eq!(corners(40, 23), vec![(136, 2), (108, 3)]);
        assert_eq!(corners(2, 1), vec![(1, 0)]);
        assert_eq!(corners(7, 4), vec![(6, 0)]);
        assert_eq!(corners(26, 15), vec![(25, 0)]);
    }

    #[test]
    fn irregular_frobenius_matches_oracle() {
        let opts = EngineOptions::default();
        for (s, t) in [(2, 1), (7, 4), (11, 6), (16, 9)] {
            let p = params(s, t, 3);
            let triple = general_xyz(&p).unwrap();
            let spec = apery_corners(&p, 0, &opts).unwrap();
            let g = corner_frobenius(&spec, &triple).unwrap();
            let oracle = gap_scan_stats(&triple.generator_set().unwrap(), 0, &opts).unwrap();
            assert_eq!(g, oracle.g, "(s,t)=({s},{t})");
            assert_eq!(spec.area(), Some(triple.x));
        }
    }

    #[test]
    fn analytic_corner_spec() {
        let opts = EngineOptions::default();
        let spec = apery_corners(&params(9, 4, 3), 0, &opts).unwrap();
        assert_eq!(spec.axes, Axes::XY);
        assert_eq!(spec.corners, vec![(21, 3), (8, 4)]);
        assert_eq!(spec.area(), Some(97));
    }

    #[test]
    fn closed_matches_generic_spot_checks() {
        let opts = EngineOptions::default();
        for (s, t, r) in [
            (9u64, 4u64, 3u32),
            (27, 14, 3),
            (24, 13, 3),
            (44, 25, 3),
            (4, 1, 3),
            (7, 2, 3),
            (53, 30, 3),
            (2, 1, 2),
            (3, 2, 2),
            (4, 1, 2),
            (5, 2, 4),
            (7, 2, 4),
            (4, 1, 4),
            (1, 8, 5),
            (2, 9, 5),
            (1, 4, 5),
        ] {
            let p = params(s, t, r);
            let triple = general_xyz(&p).unwrap();
            let gens = triple.generator_set().unwrap();
            let oracle = gap_scan_stats(&gens, 0, &opts).unwrap();
            let g = g0_closed(&p).unwrap();
            assert_eq!(g.value, oracle.g, "g mismatch at (s,t,r)=({s},{t},{r})");
            match n0_closed(&p, &opts) {
                Ok(n) => assert_eq!(n.value, oracle.n, "n mismatch at ({s},{t},{r})"),
                Err(Error::NoClosedForm(_)) => assert_eq!(r, 2),
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }

    #[test]
    fn g1_matches_generic() {
        let opts = EngineOptions::default();
        for (s, t) in [(9u64, 4u64), (11, 4), (7, 2), (18, 5)] {
            let p = params(s, t, 3);
            let triple = general_xyz(&p).unwrap();
            let gens = triple.generator_set().unwrap();
            let closed = g1_closed(&p).unwrap();
            let generic =
                crate::semigroup::stats_from_apery(&p_apery_set_with(&gens, 1, &opts).unwrap())
                    .unwrap();
            assert_eq!(closed.value, generic.g, "(s,t)=({s},{t})");
        }
    }
}
