//! Generic engine for p-numerical semigroups.
//!
//! For a coprime generator set A = {a₁, …, a_k} the denumerant d(n; A)
//! counts the nonnegative solutions of a₁x₁ + … + a_kx_k = n. The engine
//! builds denumerant tables by unbounded-knapsack accumulation, reads the
//! p-Apéry set out of them (least n ≡ j mod a₁ with d(n) ≥ p + 1), and
//! turns Apéry sets into the three semigroup statistics
//!
//! * g_p = (max_j m_j) − a₁,
//! * n_p = (1/a₁) Σ m_j − (a₁−1)/2,
//! * s_p = (1/2a₁) Σ m_j² − (1/2) Σ m_j + (a₁²−1)/12,
//!
//! all in exact integer arithmetic (the divisions are asserted exact).
//! A direct gap scan ([`gaps_oracle`]) computes the same statistics from
//! the definition and serves as an independent oracle.

use crate::error::{Error, Result};

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Knobs for the adaptive denumerant bound.
///
/// The table starts at `start_entries` (or `a₁·a_k·(p+1)` if that is
/// smaller) and doubles until every residue has found its Apéry element,
/// erroring out at `max_entries`.
#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    pub start_entries: u64,
    pub max_entries: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            start_entries: 1 << 21,
            max_entries: 1 << 25,
        }
    }
}

impl EngineOptions {
    pub fn with_cap(max_entries: u64) -> Self {
        EngineOptions {
            start_entries: (1 << 21).min(max_entries),
            max_entries,
        }
    }
}

/// Sorted coprime set of positive integer generators.
///
/// Non-minimal systems (a generator representable by the others, e.g.
/// ⟨2, 5, 11⟩) are accepted; duplicates collapse, set-style.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = u64>>(gens: I) -> Result<Self> {
        let mut gens: Vec<u64> = gens.into_iter().collect();
        if gens.iter().any(|&a| a == 0) {
            return Err(Error::InvalidGenerators("generators must be positive".into()));
        }
        gens.sort_unstable();
        gens.dedup();
        if gens.len() < 2 {
            return Err(Error::InvalidGenerators(
                "need at least two distinct generators".into(),
            ));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCoprime {
                what: format!("{gens:?}"),
                gcd: g,
            });
        }
        Ok(GeneratorSet { gens })
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// Smallest generator; the modulus of every Apéry set.
    pub fn a1(&self) -> u64 {
        self.gens[0]
    }

    pub fn max_gen(&self) -> u64 {
        *self.gens.last().unwrap()
    }

    pub fn arity(&self) -> usize {
        self.gens.len()
    }
}

impl std::fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

/// counts[n] = d(n; A) for 0 ≤ n ≤ bound.
#[derive(Debug, Clone)]
pub struct DenumerantTable {
    gens: GeneratorSet,
    counts: Vec<u64>,
}

impl DenumerantTable {
    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn bound(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// d(n; A), with d of out-of-range arguments answered as None.
    pub fn count(&self, n: u64) -> Option<u64> {
        self.counts.get(n as usize).copied()
    }
}

/// Builds the denumerant table up to `bound` by unbounded-knapsack
/// accumulation, one generator at a time, so combinations (not orderings)
/// are counted. Counts overflowing u64 are reported, not wrapped.
pub fn denumerant_table(gens: &GeneratorSet, bound: u64) -> Result<DenumerantTable> {
    let len = bound
        .checked_add(1)
        .and_then(|l| usize::try_from(l).ok())
        .ok_or(Error::Overflow("denumerant table size"))?;
    let mut counts = vec![0u64; len];
    counts[0] = 1;
    for &a in gens.gens() {
        let a = a as usize;
        for n in a..len {
            if counts[n - a] != 0 {
                counts[n] = counts[n]
                    .checked_add(counts[n - a])
                    .ok_or(Error::Overflow("denumerant count"))?;
            }
        }
    }
    Ok(DenumerantTable {
        gens: gens.clone(),
        counts,
    })
}

/// The a₁ values m_j^{(p)}, indexed by residue j mod a₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAperySet {
    gens: GeneratorSet,
    p: u32,
    m: Vec<u64>,
}

impl PAperySet {
    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn level(&self) -> u32 {
        self.p
    }

    /// m_j^{(p)} for each residue j = 0, …, a₁−1.
    pub fn values(&self) -> &[u64] {
        &self.m
    }

    pub fn max(&self) -> u64 {
        self.m.iter().copied().max().unwrap()
    }
}

fn initial_bound(gens: &GeneratorSet, p: u32, opts: &EngineOptions) -> u64 {
    let spec_start = gens
        .a1()
        .checked_mul(gens.max_gen())
        .and_then(|v| v.checked_mul(p as u64 + 1))
        .unwrap_or(u64::MAX);
    spec_start
        .min(opts.start_entries)
        .max(gens.a1().saturating_mul(4))
        .max(gens.max_gen().saturating_mul(2))
        .min(opts.max_entries)
}

/// Least n ≡ j (mod a₁) with d(n; A) ≥ p + 1, for every residue j.
///
/// The denumerant bound is adaptive: start small, double until every
/// residue is filled, fail loudly at the configured cap. Monotonicity of
/// d along +a₁ steps makes the filled values final.
pub fn p_apery_set_with(gens: &GeneratorSet, p: u32, opts: &EngineOptions) -> Result<PAperySet> {
    let a1 = gens.a1();
    let need = p as u64 + 1;
    let mut bound = initial_bound(gens, p, opts);
    loop {
        let table = denumerant_table(gens, bound)?;
        let mut m = vec![u64::MAX; a1 as usize];
        let mut found = 0usize;
        for (n, &c) in table.counts().iter().enumerate() {
            if c >= need {
                let slot = &mut m[n % a1 as usize];
                if *slot == u64::MAX {
                    *slot = n as u64;
                    found += 1;
                    if found == a1 as usize {
                        return Ok(PAperySet {
                            gens: gens.clone(),
                            p,
                            m,
                        });
                    }
                }
            }
        }
        if bound >= opts.max_entries {
            return Err(Error::DpCapExceeded {
                cap: opts.max_entries,
            });
        }
        bound = bound.saturating_mul(2).min(opts.max_entries);
    }
}

pub fn p_apery_set(gens: &GeneratorSet, p: u32) -> Result<PAperySet> {
    p_apery_set_with(gens, p, &EngineOptions::default())
}

/// How a statistics value was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodTag {
    /// Lemma formulas applied to a generic p-Apéry set.
    GenericApery,
    /// Direct gap enumeration.
    GapScan,
    /// A closed-form regime, labeled by its case id.
    ClosedForm(String),
    /// The classical two-generator formulas.
    TwoGenerator,
}

impl std::fmt::Display for MethodTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MethodTag::GenericApery => write!(f, "generic"),
            MethodTag::GapScan => write!(f, "gap-scan"),
            MethodTag::ClosedForm(case) => write!(f, "closed[{case}]"),
            MethodTag::TwoGenerator => write!(f, "two-gen"),
        }
    }
}

/// g_p, n_p and s_p at one level, plus provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupStats {
    pub p: u32,
    /// p-Frobenius number; −1 when every nonnegative integer has more than
    /// p representations (possible only when 1 is a generator).
    pub g: i128,
    /// p-Sylvester number (p-genus): the number of p-gaps.
    pub n: i128,
    /// p-Sylvester sum: the sum of the p-gaps.
    pub s: i128,
    pub method: MethodTag,
}

/// Applies the exact Apéry-set formulas for g_p, n_p and s_p.
///
/// The two divisions are exact for any well-formed Apéry set; a remainder
/// signals corrupted input and is reported as [`Error::InexactDivision`].
pub fn stats_from_apery(ap: &PAperySet) -> Result<SemigroupStats> {
    let a1 = ap.gens().a1() as i128;
    let mut sum: i128 = 0;
    let mut sum_sq: i128 = 0;
    for &mj in ap.values() {
        let mj = mj as i128;
        sum = sum.checked_add(mj).ok_or(Error::Overflow("apery sum"))?;
        sum_sq = sum_sq
            .checked_add(mj.checked_mul(mj).ok_or(Error::Overflow("apery square"))?)
            .ok_or(Error::Overflow("apery square sum"))?;
    }
    let g = ap.max() as i128 - a1;

    // n = sum/a1 - (a1-1)/2, computed as (2*sum - a1*(a1-1)) / (2*a1).
    let n_num = 2i128
        .checked_mul(sum)
        .and_then(|v| v.checked_sub(a1 * (a1 - 1)))
        .ok_or(Error::Overflow("genus numerator"))?;
    if n_num % (2 * a1) != 0 {
        return Err(Error::InexactDivision("genus formula"));
    }
    let n = n_num / (2 * a1);

    // s = sum_sq/(2 a1) - sum/2 + (a1^2-1)/12,
    // computed as (6*sum_sq - 6*a1*sum + a1*(a1^2-1)) / (12*a1).
    let s_num = 6i128
        .checked_mul(sum_sq)
        .and_then(|v| v.checked_sub(6 * a1 * sum))
        .and_then(|v| v.checked_add(a1 * (a1 * a1 - 1)))
        .ok_or(Error::Overflow("sylvester sum numerator"))?;
    if s_num % (12 * a1) != 0 {
        return Err(Error::InexactDivision("sylvester sum formula"));
    }
    let s = s_num / (12 * a1);

    Ok(SemigroupStats {
        p: ap.level(),
        g,
        n,
        s,
        method: MethodTag::GenericApery,
    })
}

/// Statistics computed by definition during a gap scan.
fn stats_from_scan(p: u32, max_gap: Option<u64>, count: u64, sum: i128) -> SemigroupStats {
    SemigroupStats {
        p,
        g: max_gap.map(|g| g as i128).unwrap_or(-1),
        n: count as i128,
        s: sum,
        method: MethodTag::GapScan,
    }
}

fn scan_gaps(
    gens: &GeneratorSet,
    p: u32,
    opts: &EngineOptions,
    mut on_gap: impl FnMut(u64),
) -> Result<SemigroupStats> {
    let a1 = gens.a1();
    let need = p as u64 + 1;
    let mut bound = initial_bound(gens, p, opts);
    loop {
        let table = denumerant_table(gens, bound)?;
        let mut run = 0u64;
        let mut max_gap = None;
        let mut count = 0u64;
        let mut sum: i128 = 0;
        for (n, &c) in table.counts().iter().enumerate() {
            if c >= need {
                run += 1;
                if run == a1 {
                    for (n, &c) in table.counts()[..=n].iter().enumerate() {
                        if c < need {
                            on_gap(n as u64);
                        }
                    }
                    return Ok(stats_from_scan(p, max_gap, count, sum));
                }
            } else {
                run = 0;
                max_gap = Some(n as u64);
                count += 1;
                sum += n as i128;
            }
        }
        if bound >= opts.max_entries {
            return Err(Error::DpCapExceeded {
                cap: opts.max_entries,
            });
        }
        bound = bound.saturating_mul(2).min(opts.max_entries);
    }
}

/// Enumerates the p-gap set G_p directly: scan n = 0, 1, 2, … and stop
/// once a₁ consecutive values all have d(n) > p (justified by denumerant
/// monotonicity along +a₁ steps). The statistics come from the definition
/// (max, cardinality, sum), independent of the Apéry formulas.
pub fn gaps_oracle_with(
    gens: &GeneratorSet,
    p: u32,
    opts: &EngineOptions,
) -> Result<(Vec<u64>, SemigroupStats)> {
    let mut gaps = Vec::new();
    let stats = scan_gaps(gens, p, opts, |n| gaps.push(n))?;
    Ok((gaps, stats))
}

pub fn gaps_oracle(gens: &GeneratorSet, p: u32) -> Result<(Vec<u64>, SemigroupStats)> {
    gaps_oracle_with(gens, p, &EngineOptions::default())
}

/// Gap-scan statistics without materializing the gap set (sweeps only
/// need g, n, s).
pub fn gap_scan_stats(gens: &GeneratorSet, p: u32, opts: &EngineOptions) -> Result<SemigroupStats> {
    scan_gaps(gens, p, opts, |_| {})
}

/// The classical two-generator values at p = 0:
/// g = (a−1)(b−1) − 1 and n = (a−1)(b−1)/2. The Sylvester sum comes from
/// the Apéry set {0, b, 2b, …, (a−1)b} through the same exact formulas.
pub fn two_gen_stats(a: u64, b: u64) -> Result<SemigroupStats> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidGenerators("two_gen_stats needs a, b >= 2".into()));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime {
            what: format!("({a},{b})"),
            gcd: g,
        });
    }
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (ai, bi) = (a as i128, b as i128);
    let gnum = (ai - 1) * (bi - 1) - 1;
    let n = (ai - 1) * (bi - 1) / 2;
    // Apéry set of <a, b> mod a is {j*b : j < a}; s falls out of the
    // standard sums.
    let sum = bi * ai * (ai - 1) / 2;
    let sum_sq = bi * bi * ai * (ai - 1) * (2 * ai - 1) / 6;
    let s_num = 6 * sum_sq - 6 * ai * sum + ai * (ai * ai - 1);
    debug_assert_eq!(s_num % (12 * ai), 0);
    let s = s_num / (12 * ai);
    Ok(SemigroupStats {
        p: 0,
        g: gnum,
        n,
        s,
        method: MethodTag::TwoGenerator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(v: &[u64]) -> GeneratorSet {
        GeneratorSet::new(v.iter().copied()).unwrap()
    }

    /// Independent oracle: count representations by exhaustive recursion.
    fn brute_denumerant(gens: &[u64], n: u64) -> u64 {
        fn rec(gens: &[u64], n: u64) -> u64 {
            match gens {
                [] => u64::from(n == 0),
                [a, rest @ ..] => {
                    let mut total = 0;
                    let mut used = 0;
                    while used <= n {
                        total += rec(rest, n - used);
                        used += a;
                    }
                    total
                }
            }
        }
        rec(gens, n)
    }

    #[test]
    fn generator_set_rejects_bad_input() {
        assert!(matches!(
            GeneratorSet::new([2, 4]),
            Err(Error::NotCoprime { gcd: 2, .. })
        ));
        assert!(GeneratorSet::new([5]).is_err());
        assert!(GeneratorSet::new([0, 3]).is_err());
        // Non-minimal systems are fine.
        assert_eq!(gs(&[11, 2, 5]).gens(), &[2, 5, 11]);
        // Pairwise non-coprime but globally coprime is fine.
        assert!(GeneratorSet::new([6, 10, 15]).is_ok());
    }

    #[test]
    fn denumerant_small_values() {
        let g = gs(&[3, 4, 5]);
        let t = denumerant_table(&g, 0).unwrap();
        assert_eq!(t.counts(), &[1]);

        let t = denumerant_table(&g, 12).unwrap();
        // 12 = 3*4 = 4*3 = 3+4+5.
        assert_eq!(t.count(12), Some(3));
        for n in 0..=12 {
            assert_eq!(t.count(n), Some(brute_denumerant(&[3, 4, 5], n)), "n={n}");
        }

        let t = denumerant_table(&gs(&[2, 3]), 1).unwrap();
        assert_eq!(t.count(1), Some(0));
    }

    #[test]
    fn denumerant_monotone_along_a1() {
        let g = gs(&[6, 10, 15]);
        let t = denumerant_table(&g, 200).unwrap();
        for n in 0..=(200 - 6) {
            assert!(t.count(n + 6).unwrap() >= t.count(n).unwrap());
        }
    }

    #[test]
    fn apery_set_345() {
        let g = gs(&[3, 4, 5]);
        let ap = p_apery_set(&g, 0).unwrap();
        assert_eq!(ap.values(), &[0, 4, 5]);
        let ap1 = p_apery_set(&g, 1).unwrap();
        assert_eq!(ap1.values(), &[9, 10, 8]);
    }

    #[test]
    fn apery_residues_and_minimality() {
        let g = gs(&[7, 11, 13]);
        for p in 0..=3 {
            let ap = p_apery_set(&g, p).unwrap();
            let t = denumerant_table(&g, ap.max()).unwrap();
            for (j, &m) in ap.values().iter().enumerate() {
                assert_eq!(m % 7, j as u64);
                assert!(t.count(m).unwrap() >= p as u64 + 1);
                if m >= 7 {
                    assert!(t.count(m - 7).unwrap() <= p as u64);
                }
            }
        }
    }

    #[test]
    fn stats_345() {
        let g = gs(&[3, 4, 5]);
        let st = stats_from_apery(&p_apery_set(&g, 0).unwrap()).unwrap();
        assert_eq!((st.g, st.n, st.s), (2, 2, 3));
        let st1 = stats_from_apery(&p_apery_set(&g, 1).unwrap()).unwrap();
        assert_eq!(st1.g, 7);
    }

    #[test]
    fn stats_25() {
        let g = gs(&[2, 5]);
        let st = stats_from_apery(&p_apery_set(&g, 0).unwrap()).unwrap();
        assert_eq!((st.g, st.n), (3, 2));
    }

    #[test]
    fn gaps_oracle_examples() {
        let g = gs(&[3, 4, 5]);
        let (gaps, st) = gaps_oracle(&g, 0).unwrap();
        assert_eq!(gaps, vec![1, 2]);
        assert_eq!((st.g, st.n, st.s), (2, 2, 3));

        let (gaps, st) = gaps_oracle(&gs(&[2, 3]), 0).unwrap();
        assert_eq!(gaps, vec![1]);
        assert_eq!((st.g, st.n), (1, 1));

        // Level 1: gaps are all n with d(n) <= 1, including 0.
        let (gaps, st) = gaps_oracle(&g, 1).unwrap();
        assert_eq!(gaps, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!((st.g, st.n, st.s), (7, 8, 28));
    }

    #[test]
    fn apery_and_scan_agree() {
        for gens in [
            vec![3u64, 4, 5],
            vec![2, 5, 11],
            vec![6, 10, 15],
            vec![5, 7, 9, 11],
            vec![4, 9],
        ] {
            let g = gs(&gens);
            for p in 0..=3 {
                let a = stats_from_apery(&p_apery_set(&g, p).unwrap()).unwrap();
                let (_, o) = gaps_oracle(&g, p).unwrap();
                assert_eq!((a.g, a.n, a.s), (o.g, o.n, o.s), "{gens:?} p={p}");
            }
        }
    }

    #[test]
    fn unit_generator_degenerates() {
        let g = gs(&[1, 2]);
        let st = stats_from_apery(&p_apery_set(&g, 0).unwrap()).unwrap();
        assert_eq!((st.g, st.n, st.s), (-1, 0, 0));
        let (gaps, st) = gaps_oracle(&g, 0).unwrap();
        assert!(gaps.is_empty());
        assert_eq!(st.g, -1);
    }

    #[test]
    fn two_gen_examples() {
        let st = two_gen_stats(2, 3).unwrap();
        assert_eq!((st.g, st.n), (1, 1));
        let st = two_gen_stats(3, 5).unwrap();
        assert_eq!((st.g, st.n), (7, 4));
        let st = two_gen_stats(2, 5).unwrap();
        assert_eq!((st.g, st.n), (3, 2));
        assert!(two_gen_stats(4, 6).is_err());
        assert!(two_gen_stats(1, 5).is_err());
    }

    #[test]
    fn two_gen_matches_oracle() {
        for a in 2..=12u64 {
            for b in (a + 1)..=20 {
                if gcd(a, b) != 1 {
                    continue;
                }
                let tg = two_gen_stats(a, b).unwrap();
                let (_, o) = gaps_oracle(&gs(&[a, b]), 0).unwrap();
                assert_eq!((tg.g, tg.n, tg.s), (o.g, o.n, o.s), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn apery_monotone_in_p() {
        let g = gs(&[5, 8, 11]);
        let mut prev = p_apery_set(&g, 0).unwrap();
        for p in 1..=4 {
            let next = p_apery_set(&g, p).unwrap();
            for j in 0..g.a1() as usize {
                assert!(prev.values()[j] <= next.values()[j]);
            }
            prev = next;
        }
    }

    #[test]
    fn dp_cap_reported() {
        let g = gs(&[101, 103]);
        let opts = EngineOptions {
            start_entries: 64,
            max_entries: 128,
        };
        assert!(matches!(
            p_apery_set_with(&g, 0, &opts),
            Err(Error::DpCapExceeded { .. })
        ));
    }
}
