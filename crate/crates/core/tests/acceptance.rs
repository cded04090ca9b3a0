//! Acceptance suite: one line per criterion, exact equalities throughout.
//!
//! Runs without the libtest harness so that every criterion line reaches the
//! test log. Exits nonzero on any unexpected failure.

use std::time::Instant;

use jetdiff::asymptotics::{
    character_sum, character_sum_exact, family_leading, leading_coefficient,
    leading_coefficient_poly_in_d, leading_signs, positivity_threshold, probe, Family, Flavor,
    GeometryKind, JetBundleSpec,
};
use jetdiff::check::Check;
use jetdiff::interp::UniPoly;
use jetdiff::intersection::{
    ch_schur, ch_schur_weights, chern_numbers_hypersurface_p4, chern_numbers_log_p3, chi_p3_bundle,
    chi_schur, ChowElement,
};
use jetdiff::invariants::{
    build_generators, highest_weight_oracle, invariant_dimension_oracle, jacobian_rank,
    verify_group_element, verify_hw_monomials, verify_invariance, verify_plucker,
    verify_relation_r, JetRing, OracleOptions, DEFAULT_SEED,
};
use jetdiff::known;
use jetdiff::poly::{fmt_rational, int, rat, Rational};
use jetdiff::rep::{enumerate_ds3_dim2, enumerate_ds3_dim3, total_dimension, Signature};

struct Outcome {
    pass: bool,
    detail: String,
    /// Failures that are understood and recorded; they keep the line red but
    /// do not abort the run.
    known_failures: Vec<String>,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, detail: String) -> Self {
        Outcome {
            pass: failures.is_empty(),
            detail: if failures.is_empty() {
                detail
            } else {
                format!("{detail}; failed: {}", failures.join("; "))
            },
            known_failures: Vec::new(),
        }
    }
}

fn fam(flavor: Flavor, k: u8) -> Family {
    Family::new(flavor, k).unwrap()
}

fn oracle_vs_theorem(n: usize, ms: std::ops::RangeInclusive<u64>) -> (Vec<String>, Vec<u64>) {
    let mut failures = Vec::new();
    let mut values = Vec::new();
    for m in ms {
        let terms = if n == 3 {
            enumerate_ds3_dim3(m)
        } else {
            enumerate_ds3_dim2(m)
        };
        let predicted = total_dimension(&terms);
        let computed = invariant_dimension_oracle(n, m, OracleOptions::default()).unwrap();
        if computed != predicted {
            failures.push(format!("m={m}: oracle {computed} vs theorem {predicted}"));
        }
        values.push(computed);
    }
    (failures, values)
}

fn criterion_1() -> Outcome {
    let (failures, values) = oracle_vs_theorem(3, 1..=12);
    Outcome::from_failures(
        failures,
        format!("n=3, m=1..12 (incl. stretch), dims {values:?}"),
    )
}

fn criterion_2() -> Outcome {
    let (mut failures, values) = oracle_vs_theorem(2, 1..=14);
    for (m, want) in [(1usize, 2u64), (3, 5), (5, 11)] {
        if values[m - 1] != want {
            failures.push(format!("spot m={m}: {} vs {want}", values[m - 1]));
        }
    }
    Outcome::from_failures(failures, format!("n=2, m=1..14, dims {values:?}"))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for m in 1..=8 {
        let c = highest_weight_oracle(3, m, OracleOptions::default()).unwrap();
        let want = enumerate_ds3_dim3(m).len() as u64;
        if c != want {
            failures.push(format!("m={m}: {c} vs {want}"));
        }
        counts.push(c);
    }
    let hw = verify_hw_monomials(3, 12).unwrap();
    failures.extend(failing(&hw));
    Outcome::from_failures(
        failures,
        format!(
            "hw counts m=1..8 {counts:?}; {} monomial checks (weight <= 12)",
            hw.len()
        ),
    )
}

fn failing(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} (computed {})", c.name, c.computed))
        .collect()
}

fn criterion_4() -> Outcome {
    let mut checks = Vec::new();
    let mut sizes = Vec::new();
    for n in [3, 2] {
        let ring = JetRing::new(n).unwrap();
        let gens = build_generators(&ring);
        sizes.push(gens.len());
        checks.extend(verify_invariance(&ring, &gens).unwrap());
        checks.extend(verify_group_element(&ring, &gens, DEFAULT_SEED).unwrap());
    }
    checks.extend(verify_relation_r(&JetRing::new(2).unwrap(), DEFAULT_SEED).unwrap());
    checks.extend(verify_plucker(&JetRing::new(3).unwrap()).unwrap());
    let mut failures = failing(&checks);
    if sizes != [16, 5] {
        failures.push(format!("generator counts {sizes:?}"));
    }
    Outcome::from_failures(
        failures,
        format!(
            "{} checks over {:?} generators, relation R, Plücker, group element",
            checks.len(),
            sizes
        ),
    )
}

fn criterion_5() -> Outcome {
    let r3 = JetRing::new(3).unwrap();
    let g3 = build_generators(&r3);
    let r2 = JetRing::new(2).unwrap();
    let g2 = build_generators(&r2);
    let free = g2.select(&["f1'", "f2'", "w12^1", "w12^2"]).unwrap();
    let ranks = [
        jacobian_rank(&r3, &g3.polys(), DEFAULT_SEED).unwrap(),
        jacobian_rank(&r2, &free, DEFAULT_SEED).unwrap(),
        jacobian_rank(&r2, &g2.polys(), DEFAULT_SEED).unwrap(),
    ];
    let failures = if ranks == [7, 4, 4] {
        Vec::new()
    } else {
        vec![format!("ranks {ranks:?}, want [7, 4, 4]")]
    };
    Outcome::from_failures(failures, format!("ranks {ranks:?}"))
}

fn compare_poly(label: &str, want: &UniPoly, got: &UniPoly, failures: &mut Vec<String>) {
    let top = want.coeffs().len().max(got.coeffs().len());
    for i in 0..top {
        if want.coeff(i) != got.coeff(i) {
            failures.push(format!(
                "{label} d^{i}: computed {} vs {}",
                fmt_rational(&got.coeff(i)),
                fmt_rational(&want.coeff(i))
            ));
        }
    }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for k in known::leading_coefficients()
        .into_iter()
        .filter(|k| k.geometry == GeometryKind::HypersurfaceP4)
    {
        let poly = leading_coefficient_poly_in_d(k.family, k.geometry).unwrap();
        compare_poly(&k.family.to_string(), &k.poly, &poly, &mut failures);
        for d in [7u64, 10, 43] {
            let spec = JetBundleSpec::new(k.family.flavor, k.family.k, k.geometry, d).unwrap();
            let lc = leading_coefficient(&spec).unwrap();
            let want = k.poly.eval(&int(d as i64));
            if lc.value != want || lc.degree != k.family.degree() {
                failures.push(format!(
                    "{} at d={d}: {} (degree {}) vs {}",
                    k.family,
                    fmt_rational(&lc.value),
                    lc.degree,
                    fmt_rational(&want)
                ));
            }
        }
        let lead = family_leading(k.family).unwrap();
        let cf = known::chern_form_for(k.family).unwrap();
        for (slot, want) in [4usize, 5, 6].iter().zip(cf.coeffs.iter()) {
            if lead.leading.coeff(*slot) != want {
                failures.push(format!("{} Chern form slot {slot}", k.family));
            }
        }
        n += 1;
    }
    Outcome::from_failures(
        failures,
        format!("{n} families: polynomial in d, spot d=7,10,43, Chern-number form"),
    )
}

fn criterion_7() -> Outcome {
    let log = GeometryKind::LogP3;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut known_failures = Vec::new();

    let k1 = known::leading_for(fam(Flavor::Ds, 1), log).unwrap();
    compare_poly(
        "k=1",
        &k1.poly,
        &leading_coefficient_poly_in_d(k1.family, log).unwrap(),
        &mut failures,
    );

    let ds3 = known::leading_for(fam(Flavor::Ds, 3), log).unwrap();
    let got3 = leading_coefficient_poly_in_d(ds3.family, log).unwrap();
    let mut ds3_mismatch = Vec::new();
    compare_poly("ds k=3", &ds3.poly, &got3, &mut ds3_mismatch);
    // The constant term is the one recorded discrepancy: the computed value
    // is the compact Chern-number form evaluated at c̄ = (64, 24, 4), and the
    // printed one is ten times larger.
    let lead3 = family_leading(ds3.family).unwrap();
    let from_chern_form = chern_numbers_log_p3(0).chi(&lead3.leading);
    let recorded = got3.coeff(0) == rat(-1513, 637_875_000)
        && got3.coeff(0) == from_chern_form
        && ds3.poly.coeff(0) == &got3.coeff(0) * int(10)
        && (1..4).all(|i| got3.coeff(i) == ds3.poly.coeff(i));
    if recorded {
        known_failures.append(&mut ds3_mismatch);
    } else {
        failures.append(&mut ds3_mismatch);
    }

    let ds2 = known::leading_for(fam(Flavor::Ds, 2), log).unwrap();
    let got2 = leading_coefficient_poly_in_d(ds2.family, log).unwrap();
    let mut ds2_mismatch = Vec::new();
    compare_poly("ds k=2", &ds2.poly, &got2, &mut ds2_mismatch);
    notes.push(if ds2_mismatch.is_empty() {
        "ds k=2 agrees with (−37/459270, 247/306180, −1/129)".to_string()
    } else {
        format!(
            "ds k=2 computed {got2}; mismatch {}",
            ds2_mismatch.join(", ")
        )
    });
    // two summation paths over every m used by the finite differences
    let f2 = ds2.family;
    let lead2 = family_leading(f2).unwrap();
    let mut compared = 0;
    for start in lead2.residue_starts {
        for j in 0..=f2.degree() as u64 + 1 {
            let m = start + j * f2.period();
            let fast = character_sum(f2, m).unwrap();
            let slow = character_sum_exact(f2, m).unwrap();
            if fast != slow {
                failures.push(format!("ds k=2 summation paths differ at m={m}"));
            }
            compared += 1;
        }
    }
    notes.push(format!(
        "ds k=2 summation paths agree at {compared} values of m"
    ));

    let mut out = Outcome::from_failures(failures, notes.join("; "));
    if !known_failures.is_empty() {
        out.pass = false;
        out.detail = format!(
            "{}; ds k=3 constant differs from the printed rational: {}",
            out.detail,
            known_failures.join(", ")
        );
        out.known_failures = known_failures;
    }
    out
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut found = Vec::new();
    for k in known::thresholds() {
        let t = positivity_threshold(k.family, k.geometry, (1, 200)).unwrap();
        let want = k.threshold;
        if t.threshold != Some(want) {
            failures.push(format!(
                "{} {}: {:?} vs {want}",
                k.family, k.geometry, t.threshold
            ));
        }
        let signs = leading_signs(k.family, k.geometry, (want - 1, want)).unwrap();
        if signs != vec![(want - 1, -1), (want, 1)] {
            failures.push(format!(
                "{} {} boundary signs {signs:?}",
                k.family, k.geometry
            ));
        }
        found.push(t.threshold);
    }
    let signs = leading_signs(fam(Flavor::Ds, 2), GeometryKind::HypersurfaceP4, (10, 200)).unwrap();
    let bad: Vec<u64> = signs
        .iter()
        .filter(|(_, s)| *s >= 0)
        .map(|(d, _)| *d)
        .collect();
    if !bad.is_empty() {
        failures.push(format!("ds k=2 not negative at {bad:?}"));
    }
    Outcome::from_failures(
        failures,
        format!("thresholds {found:?}; boundary signs at 42/43, 44/45, 33/34; ds k=2 negative on 10..=200"),
    )
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let triple = |cn: jetdiff::intersection::ChernNumbers| cn.as_triple();
    let want = (int(64), int(24), int(4));
    if triple(chern_numbers_hypersurface_p4(1)) != want {
        failures.push("hypersurface d=1 Chern numbers".into());
    }
    if triple(chern_numbers_log_p3(0)) != want {
        failures.push("log d=0 Chern numbers".into());
    }
    let o = Signature::triple(0, 0, 0).unwrap();
    if chi_schur(&o, &chern_numbers_hypersurface_p4(1)) != int(1) {
        failures.push("χ(O_X) at d=1".into());
    }
    if chi_schur(&o, &chern_numbers_hypersurface_p4(5)) != int(0) {
        failures.push("χ(O_X) at d=5".into());
    }
    let p3 = chern_numbers_log_p3(0);
    let omega = Signature::triple(1, 0, 0).unwrap();
    if chi_schur(&omega, &p3) != int(-1) {
        failures.push("χ(Ω_P³) by chi_schur".into());
    }
    if chi_p3_bundle(&int(-4), &int(6), &int(-4), &int(3)) != int(-1) {
        failures.push("χ(Ω_P³) by chi_p3_bundle".into());
    }
    if chi_p3_bundle(&int(-4), &int(0), &int(0), &int(1)) != int(-1) {
        failures.push("χ(O_P³(−4))".into());
    }
    for d in 1..=20i64 {
        let dq = int(d);
        let want: Rational = dq.pow(3) / int(6) - &dq * &dq + rat(11, 6) * &dq;
        let by_todd = int(1) - p3.chi(&ChowElement::exp_c1(&rat(-d, 4)));
        let by_formula = int(1) - chi_p3_bundle(&int(-d), &int(0), &int(0), &int(1));
        if by_todd != want || by_formula != want {
            failures.push(format!("χ(O_X) degree-{d} surface"));
        }
    }
    Outcome::from_failures(
        failures,
        "Chern numbers, χ(O_X), χ(Ω_P³), χ(O(−4)), surface χ(O_X) for d=1..20".to_string(),
    )
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();
    let mut sigs = 0;
    for l1 in 0..=6i64 {
        for l2 in 0..=l1 {
            for l3 in 0..=l2 {
                let s = Signature::triple(l1, l2, l3).unwrap();
                if ch_schur(&s) != ch_schur_weights(&s) {
                    failures.push(format!("Jacobi–Trudi vs weights at ({l1},{l2},{l3})"));
                }
                sigs += 1;
            }
        }
    }
    let families = [
        fam(Flavor::Ds, 1),
        fam(Flavor::Ds, 2),
        fam(Flavor::Gg, 2),
        fam(Flavor::Ds, 3),
        fam(Flavor::Gg, 3),
    ];
    let mut degrees = Vec::new();
    for f in families {
        let lead = family_leading(f).unwrap();
        let probes: Vec<_> = lead
            .residue_starts
            .iter()
            .map(|&s| probe(f, s).unwrap())
            .collect();
        for p in &probes {
            if !p.next_difference.is_zero() {
                failures.push(format!(
                    "{f}: difference {} from m={} nonzero",
                    f.degree() + 1,
                    p.start
                ));
            }
            if p.leading.is_zero() {
                failures.push(format!(
                    "{f}: degree-{} difference vanishes from m={}",
                    f.degree(),
                    p.start
                ));
            }
        }
        if probes[0].leading != probes[1].leading {
            failures.push(format!("{f}: residue classes disagree"));
        }
        degrees.push(f.degree());
    }
    Outcome::from_failures(
        failures,
        format!("{sigs} signatures with λ₁ ≤ 6; growth orders {degrees:?}; two residue classes per family"),
    )
}

fn main() {
    type Criterion = fn() -> Outcome;
    let criteria: [(&str, Criterion); 10] = [
        ("oracle equals decomposition, n=3", criterion_1),
        ("oracle equals decomposition, n=2", criterion_2),
        ("highest-weight counts", criterion_3),
        ("symbolic generator suite", criterion_4),
        ("transcendence degrees", criterion_5),
        ("leading coefficients, compact", criterion_6),
        ("leading coefficients, log", criterion_7),
        ("positivity thresholds", criterion_8),
        ("intersection spot checks", criterion_9),
        ("internal consistency", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let mark = if out.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [{mark}] {name}: {} ({:.1}s)",
            i + 1,
            out.detail,
            t.elapsed().as_secs_f64()
        );
        if !out.pass && (out.known_failures.is_empty() || out.detail.contains("failed:")) {
            unexpected.push(i + 1);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: no unexpected failures");
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        std::process::exit(1);
    }
}
