//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cyclicity::family::{self, Family};
use cyclicity_core::arith::{is_prime, multiplicative_order, ratio, tau, to_decimal, Rounding};
use cyclicity_core::asymptotics::{self, DEFAULT_PARTIAL_SUM_CAP};
use cyclicity_core::extremal::verify_extremal_theorem;
use cyclicity_core::formulas::{self, Counts};
use cyclicity_core::oracle::{
    all_proper_cyclic, build_group_with_cap, check_zm, element_orders, lattice_counts_with, Strategy,
};
use cyclicity_core::{Error, ExactRatio, GroupSpec};
use num_traits::Signed;

const CAP: usize = 2000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Oracle counts plus a check of `sum_d c(d) phi(d) = |G|` and
/// `sum_d c(d) = |C(G)|` on the same group.
struct OracleRun {
    counts: Counts,
    identities_hold: bool,
}

fn run_oracle(spec: &GroupSpec) -> OracleRun {
    let g = build_group_with_cap(spec, CAP).unwrap_or_else(|e| panic!("{spec}: {e}"));
    let c = lattice_counts_with(&g, CAP, Strategy::Auto).unwrap();
    let s = element_orders(&g);
    let identities_hold = s.weighted_by_phi() == g.order() as u64 && s.total() == c.cyclic;
    OracleRun { counts: Counts::new(c.cyclic, c.subgroups), identities_hold }
}

fn oracle_cdeg(spec: &GroupSpec) -> ExactRatio {
    run_oracle(spec).counts.cdeg()
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

// 1

fn exact_values() -> Outcome {
    let start = Instant::now();
    let s3 = GroupSpec::Dihedral(3);
    let s3xz2 = GroupSpec::product([GroupSpec::Dihedral(3), GroupSpec::Cyclic(2)]);
    let mut ok = oracle_cdeg(&s3) == ratio(5, 6)
        && formulas::cdeg_dihedral(3) == ratio(5, 6)
        && oracle_cdeg(&s3xz2) == ratio(5, 8);
    for p in [2u64, 3, 5] {
        ok &= formulas::cdeg_elem_abelian(p, 3).unwrap() == ratio(1, 2);
        ok &= oracle_cdeg(&GroupSpec::ElementaryAbelian { p, k: 3 }) == ratio(1, 2);
    }
    for p in [2u64, 3, 5, 7] {
        ok &= formulas::cdeg_elem_abelian(p, 2).unwrap() == ratio(p + 2, p + 3);
        ok &= oracle_cdeg(&GroupSpec::ElementaryAbelian { p, k: 2 }) == ratio(p + 2, p + 3);
    }
    let t = start.elapsed();
    outcome(ok && within(t, Duration::from_secs(1)), format!("S3, S3xZ2, Z_p^3, Z_p^2 formula and oracle agree ({t:.2?})"))
}

// 2

enum Case {
    Family(Family, Vec<u64>),
    Group(GroupSpec),
}

impl Case {
    fn label(&self) -> String {
        match self {
            Case::Family(f, p) => format!("{} {:?}", f.name(), p),
            Case::Group(g) => g.to_string(),
        }
    }

    fn spec(&self) -> GroupSpec {
        match self {
            Case::Family(f, p) => family::group_spec(*f, p).unwrap(),
            Case::Group(g) => g.clone(),
        }
    }

    fn formula(&self) -> Result<Counts, String> {
        match self {
            Case::Family(f, p) => family::formula_counts(*f, p).map_err(|e| e.to_string()),
            Case::Group(g) => formulas::formula_counts(g).map_err(|e| e.to_string()),
        }
    }
}

fn zm_r_with_order(m: u64, n: u64) -> u64 {
    (2..m).find(|&r| multiplicative_order(r, m) == Some(n)).expect("n divides m - 1")
}

fn equivalence_cases() -> Vec<Case> {
    use Family::*;
    let mut cases = Vec::new();
    let fam = |f, p: &[u64]| Case::Family(f, p.to_vec());
    for n in 1..=512 {
        cases.push(fam(Cyclic, &[n]));
    }
    for p in (2..=512u64).filter(|&p| is_prime(p)) {
        let mut k = 1;
        while p.checked_pow(k).is_some_and(|q| q <= 512) {
            cases.push(fam(ElemAbelian, &[p, u64::from(k)]));
            k += 1;
        }
    }
    for m in 1..=22u64 {
        for n in m..=512 / m {
            cases.push(fam(Rank2, &[m, n]));
        }
    }
    // Three invariant factors a | b | c, kept when |L| has a closed form.
    for a in 2..=8u64 {
        for b in (a..=512 / (a * a)).step_by(a as usize) {
            for c in (b..=512 / (a * b)).step_by(b as usize) {
                let case = fam(Abelian, &[a, b, c]);
                if case.formula().is_ok() {
                    cases.push(case);
                }
            }
        }
    }
    let odd_parts: [&[u64]; 12] =
        [&[], &[3], &[5], &[7], &[9], &[15], &[21], &[27], &[3, 3], &[3, 9], &[5, 5], &[3, 3, 3]];
    for n in 0..=6u64 {
        for odd in odd_parts {
            let order = (8u64 << n) * odd.iter().product::<u64>();
            if order <= 512 {
                let mut params = vec![n];
                params.extend_from_slice(odd);
                cases.push(fam(Hamiltonian, &params));
            }
        }
    }
    for p in (2..=512u64).filter(|&p| is_prime(p)) {
        for n in 3..=9u64 {
            if p.checked_pow(n as u32).is_some_and(|q| q <= 512) && (p > 2 || n >= 4) {
                cases.push(fam(ModM, &[p, n]));
            }
        }
    }
    for n in 3..=9 {
        cases.push(fam(Dihedral2n, &[n]));
        cases.push(fam(Quaternion2n, &[n]));
        if n >= 4 {
            cases.push(fam(Semidihedral2n, &[n]));
        }
    }
    for m in 1..=512u64 {
        for n in 1..=512 / m {
            for r in 0..m.max(1) {
                if check_zm(m, n, r).is_ok() {
                    cases.push(fam(Zm, &[m, n, r]));
                }
            }
        }
    }
    for m in 1..=256 {
        cases.push(fam(Dihedral, &[m]));
    }
    use GroupSpec as G;
    let products = [
        G::product([G::Dihedral(4), G::Cyclic(9)]),
        G::product([G::GeneralizedQuaternion(3), G::ElementaryAbelian { p: 3, k: 2 }]),
        G::product([G::GeneralizedQuaternion(4), G::AbelianProduct(vec![3, 9])]),
        G::product([G::Semidihedral(4), G::ElementaryAbelian { p: 3, k: 2 }]),
        G::product([G::ModularM { p: 2, n: 4 }, G::ElementaryAbelian { p: 5, k: 2 }]),
        G::product([G::ModularM { p: 3, n: 3 }, G::Cyclic(4)]),
        G::product([G::ModularM { p: 3, n: 3 }, G::ElementaryAbelian { p: 2, k: 2 }]),
        G::product([G::Dihedral(8), G::ModularM { p: 3, n: 3 }]),
        G::product([G::Dihedral(3), G::Cyclic(5)]),
        G::product([G::Dihedral(3), G::Cyclic(25)]),
        G::product([G::Dihedral(5), G::Cyclic(9)]),
        G::product([G::Zm { m: 7, n: 3, r: 2 }, G::Cyclic(4)]),
        G::product([G::Zm { m: 7, n: 3, r: 2 }, G::ElementaryAbelian { p: 2, k: 2 }]),
        G::product([G::Zm { m: 5, n: 4, r: 2 }, G::Cyclic(3)]),
        G::product([G::GeneralizedQuaternion(3), G::Zm { m: 7, n: 3, r: 2 }]),
    ];
    cases.extend(products.into_iter().map(Case::Group));
    // Spot checks between 512 and 2000.
    for (f, p) in [
        (Dihedral, vec![1000]),
        (Dihedral, vec![997]),
        (Cyclic, vec![1998]),
        (Rank2, vec![40, 40]),
        (Rank2, vec![30, 60]),
        (Rank2, vec![44, 44]),
        (ModM, vec![3, 6]),
        (ModM, vec![5, 4]),
        (ModM, vec![2, 10]),
        (Dihedral2n, vec![10]),
        (Quaternion2n, vec![10]),
        (Semidihedral2n, vec![10]),
        (Zm, vec![199, 9, zm_r_with_order(199, 9)]),
        (Zm, vec![241, 8, zm_r_with_order(241, 8)]),
        (Hamiltonian, vec![0, 105]),
        (Hamiltonian, vec![2, 3, 15]),
    ] {
        cases.push(Case::Family(f, p));
    }
    cases.push(Case::Group(G::product([
        G::GeneralizedQuaternion(4),
        G::AbelianProduct(vec![5, 25]),
    ])));
    cases
}

struct EquivalenceSummary {
    identities_checked: usize,
    identity_failures: Vec<String>,
}

fn oracle_equivalence() -> (Outcome, EquivalenceSummary) {
    let start = Instant::now();
    let cases = equivalence_cases();
    let mut failures = Vec::new();
    let mut summary = EquivalenceSummary { identities_checked: 0, identity_failures: Vec::new() };
    let mut slowest = (Duration::ZERO, String::new());
    for case in &cases {
        let t = Instant::now();
        let run = run_oracle(&case.spec());
        summary.identities_checked += 1;
        if !run.identities_hold {
            summary.identity_failures.push(case.label());
        }
        match case.formula() {
            Ok(f) if f == run.counts => {}
            Ok(f) => failures.push(format!(
                "{}: formula ({}, {}) vs oracle ({}, {})",
                case.label(),
                f.num_cyclic,
                f.num_subgroups,
                run.counts.num_cyclic,
                run.counts.num_subgroups
            )),
            Err(e) => failures.push(format!("{}: {e}", case.label())),
        }
        if t.elapsed() > slowest.0 {
            slowest = (t.elapsed(), case.label());
        }
    }
    let t = start.elapsed();
    let mut detail = format!(
        "{} cases, {} mismatches ({t:.1?}; slowest {} at {:.1?})",
        cases.len(),
        failures.len(),
        slowest.1,
        slowest.0
    );
    for f in failures.iter().take(5) {
        detail += &format!("\n      {f}");
    }
    let pass = failures.is_empty() && cases.len() >= 200 && within(t, Duration::from_secs(300));
    (outcome(pass, detail), summary)
}

// 3

fn hamiltonian_core() -> Outcome {
    let mut ok = true;
    let mut sum_form = Vec::new();
    for n in 0..=3u32 {
        let mut parts = vec![GroupSpec::GeneralizedQuaternion(3)];
        parts.extend((0..n).map(|_| GroupSpec::Cyclic(2)));
        let c = run_oracle(&GroupSpec::product(parts)).counts;
        ok &= c.num_cyclic == (5u32 << n).into();
        if n >= 1 {
            ok &= c.num_subgroups == formulas::l_hamiltonian_core(n);
            let alt = formulas::b_n2_sum_form(n).unwrap();
            sum_form.push(format!("n={n}: {alt} vs {}", c.num_subgroups));
        }
    }
    outcome(
        ok,
        format!(
            "|C| = 5*2^n for n = 0..3; lattice size formula matches for n = 1..3 (sum form: {})",
            sum_form.join(", ")
        ),
    )
}

// 4

fn maximal_cyclic_families() -> Outcome {
    use Family::*;
    let mut cases: Vec<(Family, Vec<u64>)> =
        [(3, 3), (5, 3), (3, 4), (2, 4)].into_iter().map(|(p, n)| (ModM, vec![p, n])).collect();
    for n in 3..=6 {
        cases.push((Dihedral2n, vec![n]));
        cases.push((Quaternion2n, vec![n]));
    }
    for n in 4..=6 {
        cases.push((Semidihedral2n, vec![n]));
    }
    let bad: Vec<String> = cases
        .iter()
        .filter(|(f, p)| {
            family::formula_counts(*f, p).unwrap() != run_oracle(&family::group_spec(*f, p).unwrap()).counts
        })
        .map(|(f, p)| format!("{} {p:?}", f.name()))
        .collect();
    outcome(bad.is_empty(), format!("{} cases, mismatches: {bad:?}", cases.len()))
}

// 5

fn zm_suite() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for m in 1..=200u64 {
        for n in 1..=200 / m {
            for r in 0..m {
                if check_zm(m, n, r).is_err() {
                    continue;
                }
                total += 1;
                let f = Counts::new(formulas::c_zm(m, n, r).unwrap(), formulas::l_zm(m, n, r).unwrap());
                if f != run_oracle(&GroupSpec::Zm { m, n, r }).counts {
                    bad.push((m, n, r));
                }
            }
        }
    }
    let dihedral_ok =
        (3..=31u64).step_by(2).all(|m| formulas::cdeg_zm(m, 2, m - 1).unwrap() == formulas::cdeg_dihedral(m));
    outcome(
        bad.is_empty() && dihedral_ok && total > 0,
        format!("{total} valid triples with mn <= 200, mismatches {bad:?}; ZM(m,2,m-1) = D_2m for odd m <= 31: {dihedral_ok}"),
    )
}

// 6

fn mean_value() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cyc"))
        .args(["meanvalue", "--digits", "3", "--prime-bound", "1000000"])
        .output()
        .expect("run cyc");
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let reported = stdout.lines().find_map(|l| l.strip_prefix("M = ")).unwrap_or("").to_string();
    let base = asymptotics::mean_value_m(1_000_000, 3).unwrap();
    let doubled = asymptotics::mean_value_m(2_000_000, 3).unwrap();
    let diff = (base.m.to_ratio() - doubled.m.to_ratio()).abs();
    let stable = doubled.render(3) == reported && diff <= base.tail_bound.to_ratio();
    let t = start.elapsed();
    outcome(
        out.status.success() && reported == "0.742" && stable && within(t, Duration::from_secs(30)),
        format!(
            "cyc meanvalue --digits 3 -> {reported}; doubling the prime bound moves M by {} <= tail {} ({t:.1?})",
            to_decimal(&diff, 12, Rounding::HalfEven),
            base.tail_bound
        ),
    )
}

// 7

fn partial_sums() -> Outcome {
    let start = Instant::now();
    let m = asymptotics::mean_value_m(1_000_000, 12).unwrap();
    let rows = asymptotics::error_profile(&[10_000, 1_000_000], &m, DEFAULT_PARTIAL_SUM_CAP).unwrap();
    let rel = |i: usize| rows[i].residual.abs() / ratio(rows[i].x, 1);
    let mean_gap = (rows[1].partial_sum.value() / ratio(1_000_000, 1) - m.m.to_ratio()).abs();
    let t = start.elapsed();
    outcome(
        mean_gap < ratio(1, 100) && rel(1) < rel(0) && within(t, Duration::from_secs(120)),
        format!(
            "|S(x)/x - M| = {} at 1e6; |residual|/x = {} at 1e4, {} at 1e6 ({t:.1?})",
            to_decimal(&mean_gap, 9, Rounding::HalfEven),
            to_decimal(&rel(0), 9, Rounding::HalfEven),
            to_decimal(&rel(1), 9, Rounding::HalfEven)
        ),
    )
}

// 8

fn extremal_theorem() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for n in 2..=12 {
            if !verify_extremal_theorem(p, n).unwrap() {
                bad.push((p, n));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && within(t, Duration::from_secs(5)),
        format!("p in {{2,3,5,7}}, n in 2..=12, failures {bad:?} ({t:.2?})"),
    )
}

// 9

fn properties(summary: &EquivalenceSummary) -> Outcome {
    let identities = summary.identity_failures.is_empty() && summary.identities_checked > 0;

    use GroupSpec as G;
    let coprime_pairs = [
        (G::Dihedral(3), G::Cyclic(5)),
        (G::GeneralizedQuaternion(3), G::Zm { m: 7, n: 3, r: 2 }),
        (G::Dihedral(4), G::ElementaryAbelian { p: 3, k: 2 }),
        (G::Zm { m: 5, n: 4, r: 2 }, G::Zm { m: 7, n: 3, r: 2 }),
        (G::Semidihedral(4), G::Cyclic(9)),
    ];
    let non_multiplicative: Vec<String> = coprime_pairs
        .iter()
        .filter(|(a, b)| oracle_cdeg(&G::product([a.clone(), b.clone()])) != oracle_cdeg(a) * oracle_cdeg(b))
        .map(|(a, b)| format!("{a}x{b}"))
        .collect();
    let multiplicative = non_multiplicative.is_empty();
    let s3xz2 = G::product([G::Dihedral(3), G::Cyclic(2)]);
    let guard = oracle_cdeg(&s3xz2) == ratio(5, 8)
        && oracle_cdeg(&G::Dihedral(3)) * oracle_cdeg(&G::Cyclic(2)) == ratio(5, 6)
        && matches!(formulas::formula_counts(&s3xz2), Err(Error::Unsupported(_)));

    let moebius = (1..=5000).all(|n| asymptotics::moebius_round_trip(n) == asymptotics::f_at(n));
    let g_bound = (1..=10_000u64).all(|n| asymptotics::g_at(n).abs() <= ratio(tau(n * n), n));
    outcome(
        identities && multiplicative && guard && moebius && g_bound,
        format!(
            "order identities on {} groups: {identities}; coprime products failing: {non_multiplicative:?}; S3xZ2 guard: {guard}; \
             Moebius round trip n <= 5000: {moebius}; |g(n)| <= tau(n^2)/n for n <= 1e4: {g_bound}",
            summary.identities_checked
        ),
    )
}

// 10

fn proper_subgroups_cyclic() -> Outcome {
    let apc = |spec: &GroupSpec| {
        let g = build_group_with_cap(spec, CAP).unwrap();
        all_proper_cyclic(&g).unwrap()
    };
    let mut expect_true: Vec<GroupSpec> =
        [2u64, 3, 5, 7].into_iter().map(|p| GroupSpec::ElementaryAbelian { p, k: 2 }).collect();
    expect_true.push(GroupSpec::GeneralizedQuaternion(3));
    // ZM(p, q^a, r) with m = p prime, where b acts with order exactly q.
    for (p, n) in [(3u64, 2u64), (3, 4), (3, 8), (5, 2), (7, 3), (7, 9), (7, 2), (13, 3), (13, 9), (11, 5)] {
        let q = cyclicity_core::arith::factorize(n).pairs()[0].0;
        for r in 2..p {
            if check_zm(p, n, r).is_ok() && multiplicative_order(r, p) == Some(q) {
                expect_true.push(GroupSpec::Zm { m: p, n, r });
            }
        }
    }
    let expect_false = [
        GroupSpec::Dihedral(4),
        GroupSpec::GeneralizedQuaternion(4),
        GroupSpec::Semidihedral(4),
        GroupSpec::ModularM { p: 3, n: 3 },
        GroupSpec::ElementaryAbelian { p: 2, k: 3 },
    ];
    let wrong: Vec<String> = expect_true
        .iter()
        .filter(|s| !apc(s))
        .chain(expect_false.iter().filter(|s| apc(s)))
        .map(|s| s.to_string())
        .collect();
    outcome(
        wrong.is_empty(),
        format!("{} true instances, {} false instances, wrong: {wrong:?}", expect_true.len(), expect_false.len()),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |id: u32, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let o = f();
        all &= o.pass;
        println!("{} [{id:>2}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    };
    report(1, "exact values", &mut exact_values);
    let mut summary = None;
    report(2, "oracle equivalence", &mut || {
        let (o, s) = oracle_equivalence();
        summary = Some(s);
        o
    });
    report(3, "Q8 x Z2^n", &mut hamiltonian_core);
    report(4, "groups with a cyclic maximal subgroup", &mut maximal_cyclic_families);
    report(5, "ZM groups", &mut zm_suite);
    report(6, "mean value", &mut mean_value);
    report(7, "partial sums", &mut partial_sums);
    report(8, "extremal rank-two groups", &mut extremal_theorem);
    let summary = summary.expect("criterion 2 ran");
    report(9, "property suites", &mut || properties(&summary));
    report(10, "all proper subgroups cyclic", &mut proper_subgroups_cyclic);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
