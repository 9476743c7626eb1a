//! Acceptance runners: each compares enumerations, decision procedures and
//! closed-form series, and reports one named check per comparison.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify_cfc, exceptional_data, verify_logarithmic};
use crate::coxeter::{
    build_family, commutation_class, is_involution, CoxeterSystem, ElementMatrix, Family, Word,
    DEFAULT_CAP,
};
use crate::cylindric::{
    covering_prefix_len, cylindric_transform, cylindric_via_concat, shift_invariant,
};
use crate::enumerate::{
    cfc_words, crosscheck, enumerate_cfc, enumerate_cfc_involutions, CheckMode,
};
use crate::error::Result;
use crate::heap::{heap_of, Heap, WitnessKind};
use crate::qseries::{
    a_cfc, cfc_series, cfci_series, d_cfc, detect_periodicity, expand, expand_tails, lucas_check,
    resolve_exceptional_poly, Coeffs, QPoly,
};

/// Number of acceptance criteria.
pub const AC_COUNT: usize = 11;
/// Seed for the sampled parts of the suite.
pub const DEFAULT_SEED: u64 = 0x00c5_fc17;
/// Random words drawn for the cylindric construction sweep.
pub const RANDOM_WORDS: usize = 10_000;
/// Longest random word in that sweep.
pub const RANDOM_MAX_LEN: usize = 20;
/// Longest word in the exhaustive cylindric construction sweep.
pub const EXHAUSTIVE_WORD_LEN: usize = 8;
/// Horizon of the oracle equivalence sweep.
pub const ORACLE_HORIZON: usize = 10;
/// Horizon of the logarithmic sweep and the largest power tested.
pub const LOG_HORIZON: usize = 12;
pub const LOG_POWER: usize = 5;
/// Largest parabolic subgroup accepted as finite.
const PARABOLIC_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Also run the long exceptional censuses.
    pub deep: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            deep: false,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcReport {
    pub id: String,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Observations that are not part of the criterion.
    pub notes: Vec<String>,
    /// Wall time, left out of serialized output.
    #[serde(skip)]
    pub millis: u64,
}

impl AcReport {
    /// `AC-k PASS|FAIL title (n/m checks)`.
    pub fn line(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        format!(
            "{} {} {} ({}/{} checks)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            ok,
            self.checks.len()
        )
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Default)]
struct Builder {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Builder {
    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.push(Check::new(name, passed, detail));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

const TITLES: [&str; AC_COUNT] = [
    "type A census and Fibonacci totals",
    "type Atilde census and periodicity",
    "type Ctilde census and periodicity",
    "types B and D censuses",
    "types Btilde and Dtilde censuses",
    "exceptional affine polynomial parts",
    "oracle equivalence",
    "cylindric construction equivalence",
    "CFC involutions",
    "logarithmic elements",
    "figure fixtures",
];

/// Runs acceptance criterion `k` (1-based).
pub fn run(k: usize, opts: &Options) -> Result<AcReport> {
    assert!(
        (1..=AC_COUNT).contains(&k),
        "criteria are numbered 1..={AC_COUNT}"
    );
    let start = Instant::now();
    let mut b = Builder::default();
    match k {
        1 => ac1(&mut b)?,
        2 => ac2(&mut b)?,
        3 => ac3(&mut b)?,
        4 => ac4(&mut b)?,
        5 => ac5(&mut b)?,
        6 => ac6(&mut b, opts)?,
        7 => ac7(&mut b)?,
        8 => ac8(&mut b, opts)?,
        9 => ac9(&mut b)?,
        10 => ac10(&mut b)?,
        _ => ac11(&mut b)?,
    }
    Ok(AcReport {
        id: format!("AC-{k}"),
        title: TITLES[k - 1],
        passed: !b.checks.is_empty() && b.checks.iter().all(|c| c.passed),
        checks: b.checks,
        notes: b.notes,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Runs every criterion in order.
pub fn run_all(opts: &Options) -> Result<Vec<AcReport>> {
    (1..=AC_COUNT).map(|k| run(k, opts)).collect()
}

fn sys(family: Family, rank: usize) -> Result<CoxeterSystem> {
    build_family(family, rank)
}

fn label(family: Family, rank: usize) -> String {
    format!("{} {rank}", family.token())
}

fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn fmt_big(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// First index where two coefficient lists differ, with both values.
fn compare(got: &[BigInt], want: &[BigInt]) -> (bool, String) {
    if got == want {
        return (
            true,
            format!("lengths 0..={} agree", got.len().saturating_sub(1)),
        );
    }
    let i = (0..got.len().max(want.len()))
        .find(|&i| got.get(i) != want.get(i))
        .unwrap_or(0);
    let show = |v: Option<&BigInt>| v.map_or("-".to_string(), ToString::to_string);
    (
        false,
        format!(
            "length {i}: census {} vs series {}",
            show(got.get(i)),
            show(want.get(i))
        ),
    )
}

fn census_vs_series(
    b: &mut Builder,
    family: Family,
    rank: usize,
    horizon: usize,
) -> Result<Vec<u64>> {
    let census = enumerate_cfc(&sys(family, rank)?, horizon, DEFAULT_CAP)?;
    let want = expand(&cfc_series(family, rank)?, horizon)?;
    let (ok, detail) = compare(&to_big(&census.counts), &want);
    b.check(
        format!("{} census to {horizon}", label(family, rank)),
        ok,
        detail,
    );
    Ok(census.counts)
}

fn periodicity(counts: &[u64]) -> Option<(usize, usize)> {
    detect_periodicity(counts).ok()
}

fn fib(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

fn ac1(b: &mut Builder) -> Result<()> {
    for n in 2..=9 {
        let counts = census_vs_series(b, Family::A, n, n + 2)?;
        let total: u64 = counts.iter().sum();
        let want = fib(2 * n + 1);
        let at_one = a_cfc(n).eval(1);
        b.check(
            format!("A {n} total is F_{}", 2 * n + 1),
            total == want && at_one == BigInt::from(want),
            format!("census {total}, series at 1 {at_one}, F {want}"),
        );
    }
    Ok(())
}

fn ac2(b: &mut Builder) -> Result<()> {
    // group Atilde_{n-1} has n generators
    for n in 3..=6 {
        let counts = census_vs_series(b, Family::Atilde, n - 1, 3 * n + 4)?;
        let got = periodicity(&counts);
        b.check(
            format!("{} periodicity", label(Family::Atilde, n - 1)),
            got == Some((n, n)),
            format!("detected {got:?}, expected (start, period) = ({n}, {n})"),
        );
    }
    Ok(())
}

fn ctilde_period(n: usize) -> usize {
    if n.is_multiple_of(2) {
        2 * n * (n + 1)
    } else {
        n * (n + 1)
    }
}

fn ac3(b: &mut Builder) -> Result<()> {
    for n in 2..=4 {
        let period = ctilde_period(n);
        let series_period = cfc_series(Family::Ctilde, n)?.tail_period();
        b.check(
            format!("{} tail period", label(Family::Ctilde, n)),
            series_period == period,
            format!("lcm of tail periods {series_period}, claimed {period}"),
        );
        let counts = census_vs_series(b, Family::Ctilde, n, n + 2 * period)?;
        let got = periodicity(&counts);
        b.check(
            format!("{} exact period", label(Family::Ctilde, n)),
            got.map(|g| g.1) == Some(period),
            format!("detected {got:?}, expected period {period}"),
        );
        b.check(
            format!("{} periodicity start", label(Family::Ctilde, n)),
            got.map(|g| g.0) == Some(n),
            format!("detected {got:?}, expected start {n}"),
        );
    }
    Ok(())
}

fn ac4(b: &mut Builder) -> Result<()> {
    for n in 2..=8 {
        let census = enumerate_cfc(&sys(Family::B, n)?, n + 2, DEFAULT_CAP)?;
        let want: Vec<BigInt> = (0..=n + 2).map(|k| a_cfc(n).coeff(k)).collect();
        let (ok, detail) = compare(&to_big(&census.counts), &want);
        b.check(format!("B {n} census equals A {n} series"), ok, detail);
    }
    for n in 1..=7 {
        let census = enumerate_cfc(&sys(Family::D, n + 1)?, n + 3, DEFAULT_CAP)?;
        let want: Vec<BigInt> = (0..=n + 3).map(|k| d_cfc(n + 1).coeff(k)).collect();
        let (ok, detail) = compare(&to_big(&census.counts), &want);
        b.check(format!("D {} census", n + 1), ok, detail);
    }
    for (n, printed) in [(1, &[1, 1][..]), (2, &[1, 2, 1]), (3, &[1, 3, 5, 4])] {
        b.check(
            format!("D {n} initial value"),
            d_cfc(n) == QPoly::from_i64(printed),
            format!("{} vs printed {printed:?}", d_cfc(n)),
        );
    }
    Ok(())
}

fn ac5(b: &mut Builder) -> Result<()> {
    // Btilde of rank r: (claimed start, claimed period) = (r + 1, 2r(2r - 1));
    // Dtilde of rank r: (r, 2(r - 1)).
    let cases = [
        (Family::Btilde, 3, 4, 30),
        (Family::Btilde, 4, 5, 56),
        (Family::Dtilde, 4, 4, 6),
        (Family::Dtilde, 5, 5, 8),
    ];
    for (family, r, start, period) in cases {
        let series_period = cfc_series(family, r)?.tail_period();
        b.check(
            format!("{} tail period", label(family, r)),
            series_period == period,
            format!("lcm of tail periods {series_period}, claimed {period}"),
        );
        let counts = census_vs_series(b, family, r, start + 2 * period + 2)?;
        let got = periodicity(&counts);
        b.check(
            format!("{} exact period", label(family, r)),
            got.map(|g| g.1) == Some(period),
            format!("detected {got:?}, expected period {period}"),
        );
        if let Some((s, _)) = got {
            if s != start {
                b.note(format!(
                    "{}: periodicity starts at {s}, stated {start}",
                    label(family, r)
                ));
            }
        }
        if family == Family::Dtilde {
            let printed: &[i64] = if r == 4 {
                &[1, 5, 14, 28, 33, 16]
            } else {
                &[1, 6, 20, 46, 73, 72, 32]
            };
            let tails = expand_tails(&cfc_series(family, r)?.tails, counts.len() - 1);
            let rest: Vec<BigInt> = counts
                .iter()
                .zip(&tails)
                .map(|(c, t)| BigInt::from(*c) - t)
                .collect();
            let got = QPoly::from_coeffs(rest);
            b.check(
                format!("Q {r} from census"),
                got == QPoly::from_i64(printed),
                format!("census minus tail {got}, printed {printed:?}"),
            );
        }
    }
    Ok(())
}

fn exceptional_checks(b: &mut Builder, family: Family, period: usize) -> Result<()> {
    let data = exceptional_data(family)?;
    let name = family.token();
    match resolve_exceptional_poly(family, &data.census) {
        Ok(p) => b.check(format!("{name} polynomial part"), true, format!("{p}")),
        Err(e) => b.check(format!("{name} polynomial part"), false, e.to_string()),
    }
    let got = periodicity(&data.census.counts);
    b.check(
        format!("{name} period"),
        got.map(|g| g.1) == Some(period),
        format!(
            "detected {got:?} to horizon {}, expected period {period}",
            data.horizon
        ),
    );
    b.note(format!(
        "{name}: {} rotations of w2, {} other CFC elements up to {}, longest {}, census {:?}",
        data.rotations.len(),
        data.finite.len(),
        data.horizon,
        data.max_finite_len(),
        data.census.counts
    ));
    Ok(())
}

fn ac6(b: &mut Builder, opts: &Options) -> Result<()> {
    exceptional_checks(b, Family::G2tilde, 5)?;
    let data = exceptional_data(Family::G2tilde)?;
    b.check(
        "G2tilde finite part stable",
        data.is_stable(),
        format!(
            "longest non-periodic element {}, horizon {}",
            data.max_finite_len(),
            data.horizon
        ),
    );
    if opts.deep {
        exceptional_checks(b, Family::E6tilde, 12)?;
        exceptional_checks(b, Family::E7tilde, 18)?;
    } else {
        b.note("E6tilde and E7tilde skipped; enable the deep runs to include them");
    }
    Ok(())
}

fn ac7(b: &mut Builder) -> Result<()> {
    for (family, r) in [
        (Family::A, 3),
        (Family::B, 3),
        (Family::Ctilde, 2),
        (Family::D, 4),
        (Family::G2tilde, 2),
    ] {
        let rep = crosscheck(
            &sys(family, r)?,
            ORACLE_HORIZON,
            CheckMode::Exhaustive,
            DEFAULT_CAP,
        )?;
        b.check(
            format!("{} to {ORACLE_HORIZON}", label(family, r)),
            rep.disagreements == 0 && rep.words > 0,
            format!(
                "{} words, {} elements, {} disagreements, first {:?}",
                rep.words, rep.elements, rep.disagreements, rep.first_counterexample
            ),
        );
    }
    Ok(())
}

fn all_words(n: u8, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut level = vec![Word::empty()];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w| {
                (0..n).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

fn constructions_agree(sys: &CoxeterSystem, w: &Word) -> bool {
    cylindric_transform(sys, &heap_of(sys, w)).edges() == cylindric_via_concat(sys, w).edges()
}

/// Uniform choice among minimal remaining points at each step.
fn random_linear_extension(h: &Heap, rng: &mut ChaCha8Rng) -> Word {
    let mut used = fixedbitset::FixedBitSet::with_capacity(h.len());
    let mut out = Vec::with_capacity(h.len());
    while out.len() < h.len() {
        let ready: Vec<usize> = (0..h.len())
            .filter(|&i| !used.contains(i) && h.below(i).is_subset(&used))
            .collect();
        let i = ready[rng.gen_range(0..ready.len())];
        used.insert(i);
        out.push(h.label(i));
    }
    Word::from(out)
}

fn ac8(b: &mut Builder, opts: &Options) -> Result<()> {
    for (family, r) in [(Family::A, 3), (Family::Ctilde, 2)] {
        let s = sys(family, r)?;
        let words = all_words(s.rank() as u8, EXHAUSTIVE_WORD_LEN);
        let mismatched = words.iter().filter(|w| !constructions_agree(&s, w)).count();
        b.check(
            format!(
                "{} constructions, words to {EXHAUSTIVE_WORD_LEN}",
                label(family, r)
            ),
            mismatched == 0,
            format!("{} words, {mismatched} disagreements", words.len()),
        );
        let (mut pairs, mut bad) = (0u64, 0u64);
        for x in &words {
            for k in 0..x.len().max(1) {
                for y in commutation_class(&s, &x.cyclic_shift(k), DEFAULT_CAP)? {
                    pairs += 1;
                    bad += u64::from(!shift_invariant(&s, x, k, &y));
                }
            }
        }
        b.check(
            format!(
                "{} shift invariance, words to {EXHAUSTIVE_WORD_LEN}",
                label(family, r)
            ),
            bad == 0,
            format!("{pairs} (word, shift, class member) triples, {bad} disagreements"),
        );
    }
    let lin = sys(Family::Linear, 7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut mismatched, mut pairs, mut bad) = (0u64, 0u64, 0u64);
    for _ in 0..RANDOM_WORDS {
        let len = rng.gen_range(0..=RANDOM_MAX_LEN);
        let w = Word::from((0..len).map(|_| rng.gen_range(0..7u8)).collect::<Vec<_>>());
        mismatched += u64::from(!constructions_agree(&lin, &w));
        for k in 0..w.len().max(1) {
            let y = random_linear_extension(&heap_of(&lin, &w.cyclic_shift(k)), &mut rng);
            pairs += 1;
            bad += u64::from(!shift_invariant(&lin, &w, k, &y));
        }
    }
    b.check(
        format!("linear 7 constructions, {RANDOM_WORDS} random words"),
        mismatched == 0,
        format!("seed {:#x}, {mismatched} disagreements", opts.seed),
    );
    b.check(
        "linear 7 shift invariance, random words",
        bad == 0,
        format!("{pairs} (word, shift, random class member) triples, {bad} disagreements"),
    );
    Ok(())
}

/// CFC involutions by length, found by filtering the CFC census.
fn involution_counts(s: &CoxeterSystem, horizon: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; horizon + 1];
    for w in cfc_words(s, horizon, DEFAULT_CAP)? {
        if is_involution(s, &w) {
            counts[w.len()] += 1;
        }
    }
    Ok(counts)
}

fn involution_ranks() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    out.extend((2..=9).map(|n| (Family::A, n)));
    out.extend((2..=5).map(|n| (Family::Atilde, n)));
    out.extend((2..=4).map(|n| (Family::Ctilde, n)));
    out.extend((2..=8).map(|n| (Family::B, n)));
    out.extend((2..=8).map(|n| (Family::D, n)));
    out.extend([
        (Family::Btilde, 3),
        (Family::Btilde, 4),
        (Family::Dtilde, 4),
        (Family::Dtilde, 5),
    ]);
    out
}

fn ac9(b: &mut Builder) -> Result<()> {
    for (family, r) in involution_ranks() {
        let s = sys(family, r)?;
        let horizon = s.rank() + 2;
        let brute = involution_counts(&s, horizon)?;
        let want = expand(&cfci_series(family, r)?, horizon)?;
        let mut by_rule = enumerate_cfc_involutions(&s).counts;
        by_rule.resize(horizon + 1, 0);
        let (ok, detail) = compare(&to_big(&brute), &want);
        b.check(
            format!("{} involutions", label(family, r)),
            ok && by_rule == brute,
            format!(
                "{detail}; independent-set count {}",
                fmt_big(&to_big(&by_rule))
            ),
        );
        let longest = brute.iter().rposition(|&c| c > 0).unwrap_or(0);
        b.check(
            format!("{} involution length", label(family, r)),
            longest <= s.rank(),
            format!("longest {longest}, |S| = {}", s.rank()),
        );
        // swap 3 and 4 on every edge; the edge set is unchanged
        let flips: Vec<(u8, u8)> = s
            .edges()
            .into_iter()
            .filter(|&(x, y)| matches!(s.m(x, y), 3 | 4))
            .collect();
        if flips.is_empty() {
            b.note(format!("{}: no edges to mutate", label(family, r)));
            continue;
        }
        let mut mutated = s.clone();
        for &(x, y) in &flips {
            mutated = mutated.with_entry(x, y, 7 - s.m(x, y))?;
        }
        let after = involution_counts(&mutated, horizon)?;
        b.check(
            format!(
                "{} involutions with 3 and 4 swapped on {} edges",
                label(family, r),
                flips.len()
            ),
            after == brute,
            format!(
                "{} vs {}",
                fmt_big(&to_big(&after)),
                fmt_big(&to_big(&brute))
            ),
        );
    }
    let failing: Vec<usize> = (1..=10).filter(|&n| !lucas_check(n)).collect();
    b.check(
        "Lucas identity for n <= 10",
        failing.is_empty(),
        format!("failing n: {failing:?}"),
    );
    Ok(())
}

/// Order of the standard parabolic subgroup on `gens`, if at most `cap`.
fn parabolic_order(s: &CoxeterSystem, gens: &[u8], cap: usize) -> Result<Option<usize>> {
    let names = gens.iter().map(|&g| s.name(g).to_string()).collect();
    let matrix = gens
        .iter()
        .map(|&x| gens.iter().map(|&y| s.m(x, y)).collect())
        .collect();
    let sub = CoxeterSystem::new(names, matrix)?;
    let mut seen: HashSet<ElementMatrix> = HashSet::new();
    let mut level = vec![ElementMatrix::identity(sub.rank())];
    seen.insert(level[0].clone());
    while !level.is_empty() {
        let mut next = Vec::new();
        for m in &level {
            for g in 0..sub.rank() as u8 {
                if m.lengthens(g) {
                    let mut e = m.clone();
                    e.right_mul(&sub, g);
                    if seen.insert(e.clone()) {
                        next.push(e);
                    }
                }
            }
        }
        if seen.len() > cap {
            return Ok(None);
        }
        level = next;
    }
    Ok(Some(seen.len()))
}

fn coxeter_element(s: &CoxeterSystem) -> Word {
    Word::from((0..s.rank() as u8).collect::<Vec<_>>())
}

fn ac10(b: &mut Builder) -> Result<()> {
    for (family, r) in [
        (Family::Atilde, 2),
        (Family::Atilde, 3),
        (Family::Ctilde, 2),
        (Family::Ctilde, 3),
        (Family::Btilde, 3),
        (Family::Dtilde, 4),
    ] {
        let s = sys(family, r)?;
        let words = cfc_words(&s, LOG_HORIZON, DEFAULT_CAP)?;
        let (mut full, mut bad) = (0u64, Vec::new());
        let mut orders: HashMap<Vec<u8>, Option<usize>> = HashMap::new();
        let mut infinite = Vec::new();
        for w in &words {
            let support = w.support();
            if support.len() == s.rank() {
                full += 1;
                if !verify_logarithmic(&s, w, LOG_POWER) && bad.len() < 3 {
                    bad.push(s.format_word(w));
                }
            } else {
                let order = match orders.get(&support) {
                    Some(&o) => o,
                    None => {
                        let o = parabolic_order(&s, &support, PARABOLIC_CAP)?;
                        orders.insert(support.clone(), o);
                        o
                    }
                };
                if order.is_none() && infinite.len() < 3 {
                    infinite.push(s.format_word(w));
                }
            }
        }
        b.check(
            format!(
                "{} full support logarithmic to {LOG_HORIZON}",
                label(family, r)
            ),
            bad.is_empty() && full > 0,
            format!("{full} elements, failing {bad:?}"),
        );
        b.check(
            format!("{} proper support in finite parabolic", label(family, r)),
            infinite.is_empty(),
            format!(
                "{} elements over {} supports, infinite {infinite:?}",
                words.len() as u64 - full,
                orders.len()
            ),
        );
        let c = coxeter_element(&s);
        if matches!(family, Family::Atilde | Family::Ctilde) {
            let mut results = Vec::new();
            for k in 1..=4 {
                let cl = classify_cfc(&s, &c.power(k))?;
                results.push(cl.reduced && cl.cfc);
            }
            b.check(
                format!("{} Coxeter element powers 1..=4 CFC", label(family, r)),
                results.iter().all(|&x| x),
                format!("{results:?}"),
            );
        } else {
            let once = classify_cfc(&s, &c)?;
            let twice = classify_cfc(&s, &c.power(2))?;
            b.check(
                format!("{} Coxeter element CFC, square not", label(family, r)),
                once.cfc && twice.reduced && !twice.cfc,
                format!(
                    "c cfc {}, c^2 reduced {} cfc {}",
                    once.cfc, twice.reduced, twice.cfc
                ),
            );
        }
    }
    Ok(())
}

/// Non-CFC word of the 7-generator linear diagram with a wrap-around `s6`.
pub const FIGURE_WORD: &str = "s2 s1 s0 s3 s2 s6 s5 s4 s5 s6 s3";
/// Word whose covering prefix is [`FIGURE_PREFIX`].
pub const PREFIX_WORD: &str = "s1 s0 s1 s3 s2 s6 s5 s4 s6 s5 s3 s0 s1 s0";
pub const FIGURE_PREFIX: &str = "s1 s0 s1 s3 s2 s6 s5 s4";

fn ac11(b: &mut Builder) -> Result<()> {
    let lin = sys(Family::Linear, 7)?;
    let w = lin.parse_word(FIGURE_WORD)?;
    let c = classify_cfc(&lin, &w)?;
    let s6 = lin.generator("s6")?;
    let witness_ok = c.witness.as_ref().is_some_and(|x| {
        x.kind == WitnessKind::SameLabelCover && x.points.iter().all(|&i| w.letters()[i] == s6)
    });
    b.check(
        "figure word not CFC with an s6 same-label witness",
        c.reduced && !c.cfc && witness_ok,
        format!("cfc {}, witness {:?}", c.cfc, c.witness),
    );
    let p = lin.parse_word(PREFIX_WORD)?;
    let prefix = Word::from(&p.letters()[..covering_prefix_len(&p)]);
    b.check(
        "covering prefix",
        lin.format_word(&prefix) == FIGURE_PREFIX,
        lin.format_word(&prefix),
    );
    b.check(
        "prefix word constructions agree",
        constructions_agree(&lin, &p),
        format!("{} edges", cylindric_via_concat(&lin, &p).edges().len()),
    );
    Ok(())
}

/// Census against series for one family, as run by `verify <family> <rank>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub n: usize,
    pub horizon: usize,
    pub census: Vec<u64>,
    pub expansion: Option<Coeffs>,
    pub periodicity: Option<(usize, usize)>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Extra comparisons for [`verify_family`].
#[derive(Clone, Copy, Debug)]
pub struct FamilyOptions {
    /// Also compare CFC involutions with their series.
    pub involutions: bool,
    /// Seed of a sampled crosscheck of every decision procedure.
    pub seed: Option<u64>,
    pub cap: usize,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            involutions: false,
            seed: None,
            cap: DEFAULT_CAP,
        }
    }
}

/// Reduced words drawn by the sampled crosscheck of [`verify_family`].
pub const FAMILY_SAMPLES: usize = 1000;

/// Compares the CFC census of `sys` with its series up to `horizon`.
pub fn verify_family(
    s: &CoxeterSystem,
    horizon: usize,
    opts: &FamilyOptions,
) -> Result<FamilyReport> {
    let family = s.family();
    let n = s.family_rank();
    let census = enumerate_cfc(s, horizon, opts.cap)?;
    let series = cfc_series(family, n)?;
    let mut b = Builder::default();
    let expansion = if family.is_exceptional() {
        match resolve_exceptional_poly(family, &census) {
            Ok(p) => {
                b.check("census minus tail is a polynomial", true, p.to_string());
                let mut full = series.clone();
                full.poly = Some(p);
                Some(Coeffs(expand(&full, horizon)?))
            }
            Err(e) => {
                b.check("census minus tail is a polynomial", false, e.to_string());
                None
            }
        }
    } else {
        let want = expand(&series, horizon)?;
        let (ok, detail) = compare(&to_big(&census.counts), &want);
        b.check("census equals series", ok, detail);
        Some(Coeffs(want))
    };
    if let Some(seed) = opts.seed {
        let mode = CheckMode::Sampled {
            samples: FAMILY_SAMPLES,
            seed,
        };
        let rep = crosscheck(s, horizon, mode, opts.cap)?;
        b.check(
            "sampled crosscheck",
            rep.disagreements == 0,
            format!(
                "{} words, {} disagreements, first {:?}",
                rep.words, rep.disagreements, rep.first_counterexample
            ),
        );
    }
    if opts.involutions {
        let h = s.rank() + 2;
        let brute = involution_counts(s, h)?;
        let want = expand(&cfci_series(family, n)?, h)?;
        let (ok, detail) = compare(&to_big(&brute), &want);
        b.check("involutions equal series", ok, detail);
    }
    let periodicity = periodicity(&census.counts);
    Ok(FamilyReport {
        family: family.token().to_string(),
        n,
        horizon,
        passed: b.checks.iter().all(|c| c.passed),
        census: census.counts,
        expansion,
        periodicity,
        checks: b.checks,
    })
}
