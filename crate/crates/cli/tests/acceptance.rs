//! Acceptance gate: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use quartic_pd::definiteness_2d::quartic_criterion;
use quartic_pd::definiteness_2d::PdCase;
use quartic_pd::{
    classify_couplings2, classify_couplings3, classify_m, classify_tensor2, couplings2_to_tensor,
    discriminant_report, min_potential3, min_quartic_exact, primed_couplings, quartic_discriminant,
    quartic_nonneg, quartic_positive, Class, Confidence, Couplings2, Couplings3, MSign,
    QuarticPoly, Rational, Scalar, Sym4Tensor2, Tolerance,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn rand_q(r: &mut impl Rng, num: i64, den: i64) -> Rational {
    q(r.gen_range(-num..=num), r.gen_range(1..=den))
}

/// Sometimes exactly zero, to reach degenerate branches.
fn rand_q_sparse(r: &mut impl Rng) -> Rational {
    if r.gen_bool(0.2) {
        q(0, 1)
    } else {
        rand_q(r, 12, 6)
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn quartic_vs_oracle() -> Outcome {
    let mut r = rng(1);
    let (mut compared, mut disagree, mut skipped, mut positive) = (0, 0, 0, 0);
    let mut first = None;
    for _ in 0..100_000 {
        let a = r.gen_range(0.1..=5.0);
        let e = r.gen_range(0.1..=5.0);
        let [b, c, d] = [(); 3].map(|_| r.gen_range(-5.0..=5.0));
        let p = QuarticPoly::new(a, b, c, d, e).unwrap();
        let min = min_quartic_exact(&p).unwrap().min_value;
        let pos = quartic_positive(&p).unwrap();
        let nonneg = quartic_nonneg(&p).unwrap();
        if pos && !nonneg {
            disagree += 1;
            first.get_or_insert(format!("{:?}: positive but not nonnegative", p.coeffs()));
        }
        if min.abs() <= 1e-7 * p.max_abs_coeff() {
            skipped += 1;
            continue;
        }
        compared += 1;
        positive += (min > 0.0) as usize;
        if pos != (min > 0.0) || nonneg != (min >= 0.0) {
            disagree += 1;
            first.get_or_insert(format!(
                "{:?}: min {min}, positive {pos}, nonneg {nonneg}",
                p.coeffs()
            ));
        }
    }
    check(
        disagree == 0,
        format!(
            "{compared} compared ({positive} positive), {skipped} inside band, {disagree} disagreements{}",
            first.map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn knife_edges() -> Outcome {
    let poly = |c: [i64; 5]| QuarticPoly::from_coeffs(c.map(|v| q(v, 1))).unwrap();
    let tol = Tolerance::default();
    let mut fails = Vec::new();
    let mut expect = |name: &str, ok: bool| {
        if !ok {
            fails.push(name.to_string());
        }
    };

    let p = poly([1, 0, 2, 0, 1]);
    let crit = quartic_criterion(&p, tol).unwrap();
    expect("(t²+1)² case (1)", crit.positive == Some(PdCase::One));
    expect("(t²+1)² Δ=0", crit.discriminant == q(0, 1));

    let p = poly([1, 0, -2, 0, 1]);
    expect("(t²−1)² Δ=0", quartic_discriminant(&p) == q(0, 1));
    expect(
        "(t²−1)² PSD-only",
        quartic_nonneg(&p).unwrap() && !quartic_positive(&p).unwrap(),
    );

    let p = poly([1, -4, 6, -4, 1]);
    expect(
        "(t−1)⁴ PSD-only",
        quartic_nonneg(&p).unwrap() && !quartic_positive(&p).unwrap(),
    );

    let p = poly([1, 0, 0, 0, 1]);
    let crit = quartic_criterion(&p, tol).unwrap();
    expect("t⁴+1 case (2)(i)", crit.positive == Some(PdCase::TwoI));
    expect("t⁴+1 Δ=6912", crit.discriminant == q(6912, 1));
    check(
        fails.is_empty(),
        if fails.is_empty() {
            "4 fixtures exact".into()
        } else {
            fails.join(", ")
        },
    )
}

fn discriminant_identity() -> Outcome {
    let mut r = rng(3);
    let mut exact_bad = 0;
    for _ in 0..10_000 {
        let t = Sym4Tensor2::from_entries([(); 5].map(|_| rand_q(&mut r, 30, 12))).unwrap();
        let rep = discriminant_report(&t);
        let i3 = rep.i.clone() * rep.i.clone() * rep.i.clone();
        if rep.delta != q(6912, 1) * (i3 - q(27, 1) * rep.j.clone() * rep.j.clone()) {
            exact_bad += 1;
        }
    }
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let t = Sym4Tensor2::from_entries([(); 5].map(|_| r.gen_range(-5.0..=5.0))).unwrap();
        let rep = discriminant_report(&t);
        let [a, b, c, d, e] = t.restrict_to_line().coeffs().map(f64::abs);
        // Size of the terms that cancel inside Δ.
        let lo = 12.0 * a * e + 3.0 * b * d + c * c;
        let hi = 72.0 * a * c * e
            + 9.0 * b * c * d
            + 2.0 * c.powi(3)
            + 27.0 * a * d * d
            + 27.0 * b * b * e;
        let scale = 4.0 * lo.powi(3) + hi * hi;
        let rhs = 6912.0 * (rep.i.powi(3) - 27.0 * rep.j * rep.j);
        worst = worst.max((rep.delta - rhs).abs() / scale);
    }
    check(
        exact_bad == 0 && worst <= 1e-10,
        format!(
            "10000 rational exact mismatches {exact_bad}; float worst relative error {worst:.2e}"
        ),
    )
}

fn tensor_vs_couplings() -> Outcome {
    let mut r = rng(4);
    let mut bad = 0;
    let mut classes = [0usize; 3];
    for _ in 0..10_000 {
        let c = Couplings2::from_array([(); 5].map(|_| r.gen_range(-5.0..=5.0))).unwrap();
        let (a, b) = (
            classify_couplings2(&c).class,
            classify_tensor2(&couplings2_to_tensor(&c)).class,
        );
        bad += (a != b) as usize;
        classes[a.code() as usize] += 1;
    }
    for _ in 0..10_000 {
        let c = Couplings2::from_array([(); 5].map(|_| rand_q_sparse(&mut r))).unwrap();
        let (a, b) = (
            classify_couplings2(&c).class,
            classify_tensor2(&couplings2_to_tensor(&c)).class,
        );
        bad += (a != b) as usize;
        classes[a.code() as usize] += 1;
    }
    check(
        bad == 0,
        format!(
            "20000 inputs (PD {}, PSD-only {}, indefinite {}), {bad} mismatches",
            classes[0], classes[1], classes[2]
        ),
    )
}

fn rand_couplings3(r: &mut impl Rng, want: impl Fn(MSign) -> bool) -> Couplings3<f64> {
    loop {
        let lh = r.gen_range(0.1..=5.0);
        let [p, qq, s] = [(); 3].map(|_| r.gen_range(-5.0..=5.0));
        let l40 = r.gen_range(0.0..=5.0);
        let l04 = r.gen_range(0.0..=5.0);
        let [l31, l13] = [(); 2].map(|_| r.gen_range(-3.0..=3.0));
        let l22 = r.gen_range(-5.0..=5.0);
        let c = Couplings3::from_array([lh, p, qq, s, l40, l31, l22, l13, l04]).unwrap();
        if want(classify_m(&c).class) {
            return c;
        }
    }
}

fn three_field_vs_oracle() -> Outcome {
    let mut r = rng(5);
    let (mut compared, mut skipped, mut bad) = (0, 0, 0);
    let mut classes = [0usize; 4];
    let mut first = None;
    for _ in 0..10_000 {
        let c = rand_couplings3(&mut r, |m| m != MSign::Indefinite);
        let v = classify_couplings3(&c);
        classes[v.class.code() as usize] += 1;
        if let Some([a, b, h]) = v.witness {
            if c.eval(&a, &b, &h) > 1e-9 * c.max_abs() {
                bad += 1;
                first.get_or_insert(format!("{:?}: witness not ≤ 0", c.to_array()));
            }
        }
        let min = min_potential3(&c).min_value;
        if min.abs() <= 1e-6 * c.max_abs() {
            skipped += 1;
            continue;
        }
        compared += 1;
        let oracle = if min > 0.0 {
            Class::PositiveDefinite
        } else {
            Class::Indefinite
        };
        if v.class != oracle || v.confidence != Confidence::Analytic {
            bad += 1;
            first.get_or_insert(format!(
                "{:?}: {:?} vs oracle min {min}",
                c.to_array(),
                v.class
            ));
        }
    }
    check(
        bad == 0,
        format!(
            "{compared} compared, {skipped} inside band (PD {}, PSD-only {}, indefinite {}), {bad} disagreements{}",
            classes[0],
            classes[1],
            classes[2],
            first.map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn indefinite_m_honesty() -> Outcome {
    let mut r = rng(6);
    let (mut false_pos, mut bad_witness) = (0, 0);
    let mut tally = std::collections::BTreeMap::new();
    for _ in 0..1_000 {
        let c = rand_couplings3(&mut r, |m| m == MSign::Indefinite);
        let v = classify_couplings3(&c);
        *tally
            .entry(format!("{}/{}", v.class, v.confidence))
            .or_insert(0) += 1;
        let min = min_potential3(&c).min_value;
        if v.class == Class::PositiveDefinite
            && v.confidence == Confidence::Analytic
            && min < -1e-9 * c.max_abs()
        {
            false_pos += 1;
        }
        if let Some([a, b, h]) = v.witness {
            if c.eval(&a, &b, &h) > 0.0 {
                bad_witness += 1;
            }
        }
    }
    let tally: Vec<String> = tally.iter().map(|(k, n)| format!("{k} {n}")).collect();
    check(
        false_pos == 0 && bad_witness == 0,
        format!(
            "1000 instances, {false_pos} analytic false positives, {bad_witness} bad witnesses ({})",
            tally.join(", ")
        ),
    )
}

fn primed_identity() -> Outcome {
    let mut r = rng(7);
    let mut bad = 0;
    for _ in 0..1_000 {
        let c = Couplings3::from_array([(); 9].map(|_| rand_q(&mut r, 20, 9))).unwrap();
        let lh4 = q(4, 1) * c.lambda_h().clone();
        let m = [
            c.lambda_h20().clone(),
            c.lambda_h11().clone(),
            c.lambda_h02().clone(),
        ];
        // M² by polynomial convolution of (φ1², φ1φ2, φ2²) coefficients.
        let mut m2 = vec![q(0, 1); 5];
        for i in 0..3 {
            for j in 0..3 {
                m2[i + j] += m[i].clone() * m[j].clone();
            }
        }
        let vbar = c.quartic().to_array();
        let want: Vec<Rational> = (0..5)
            .map(|k| lh4.clone() * vbar[k].clone() - m2[k].clone())
            .collect();
        let got = primed_couplings(&c).quartic.to_array().to_vec();
        bad += (got != want) as usize;
    }
    check(
        bad == 0,
        format!("1000 rational instances, {bad} coefficient mismatches"),
    )
}

fn invariance() -> Outcome {
    let mut r = rng(8);
    let scales = [q(1, 7), q(3, 1), q(100, 1)];
    let (mut bad2, mut bad_coord, mut bad3, mut bad_float) = (0, 0, 0, 0);
    for _ in 0..1_000 {
        let c = Couplings2::from_array([(); 5].map(|_| rand_q_sparse(&mut r))).unwrap();
        let base = classify_couplings2(&c).class;
        let [a, b, cc, d, e] = c.to_array();
        let f = c.to_f64();
        let fbase = classify_couplings2(&f).class;
        for s in &scales {
            bad2 += (classify_couplings2(&c.scaled(s)).class != base) as usize;
            let s2 = s.clone() * s.clone();
            let coord = Couplings2::new(
                a.clone() * s2.clone() * s2.clone(),
                b.clone() * s2.clone() * s.clone(),
                cc.clone() * s2,
                d.clone() * s.clone(),
                e.clone(),
            )
            .unwrap();
            bad_coord += (classify_couplings2(&coord).class != base) as usize;
            bad_float += (classify_couplings2(&f.scaled(&s.approx())).class != fbase) as usize;
        }
    }
    for _ in 0..1_000 {
        let c = Couplings3::from_array([(); 9].map(|_| rand_q(&mut r, 10, 4))).unwrap();
        let base = classify_couplings3(&c).class;
        for s in &scales {
            bad3 += (classify_couplings3(&c.scaled(s)).class != base) as usize;
        }
    }
    check(
        bad2 + bad_coord + bad3 + bad_float == 0,
        format!(
            "changes: binary global {bad2}, binary coordinate {bad_coord}, binary float global {bad_float}, three-field global {bad3} (1000 instances × 3 scales each)"
        ),
    )
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quartic-pd"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("run quartic-pd");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json_field(stdout: &str, key: &str) -> serde_json::Value {
    let v: serde_json::Value = serde_json::from_str(stdout).unwrap_or(serde_json::Value::Null);
    v[key].clone()
}

fn cli_contract() -> Outcome {
    let mut fails = Vec::new();
    let cases: [(&str, i32, &str); 7] = [
        ("quartic_pd.json", 0, "Thm3.3-(2)(i)"),
        ("quartic_knife_edge.json", 0, "Thm3.3-(1)"),
        ("quartic_psd.json", 1, "Thm3.3-PSD-(i)"),
        ("quartic_indefinite.json", 2, "Thm3.3-not-PSD"),
        ("higgs_nd_portal.json", 0, "Thm3.6-(2)-④(i)"),
        ("higgs_psd_portal.json", 0, "Thm3.6-(1)-②(i)"),
        ("higgs_unstable.json", 2, ""),
    ];
    for (file, code, cert) in cases {
        let (got, out, _) = cli(&["check", file, "--json"]);
        let got_cert = json_field(&out, "certificate");
        if got != code || (!cert.is_empty() && got_cert != cert) {
            fails.push(format!("{file}: exit {got}, certificate {got_cert}"));
        }
        if json_field(&out, "exit_code") != code {
            fails.push(format!("{file}: reported exit_code disagrees"));
        }
    }
    let (_, out, _) = cli(&["check", "quartic_pd.json", "--json"]);
    if json_field(&out, "invariants")["delta"] != 3888.0 {
        fails.push("Δ=3888 not reported".into());
    }
    for (file, code) in [
        ("malformed.json", 64),
        ("unknown_keys.json", 64),
        ("missing.json", 66),
    ] {
        let (got, _, err) = cli(&["check", file]);
        if got != code {
            fails.push(format!("{file}: exit {got}"));
        }
        if file == "malformed.json" && !err.contains("line 4") {
            fails.push(format!("no line/column diagnostic: {err}"));
        }
        if file == "unknown_keys.json" && !(err.contains("lambda_H") && err.contains("kappa")) {
            fails.push(format!("unknown keys not listed: {err}"));
        }
    }
    for (file, code) in [
        ("quartic_circle.json", 0),
        ("higgs_only.json", 1),
        ("higgs_unstable.json", 2),
    ] {
        let (got, _, _) = cli(&["oracle", file]);
        if got != code {
            fails.push(format!("oracle {file}: exit {got}"));
        }
    }

    let dir = tempfile::tempdir().expect("tempdir");
    let out = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let scan = |jobs: &str, path: &str| {
        cli(&[
            "scan",
            "scan_base.json",
            "--axis1",
            "lambda_22:-4:8:13",
            "--axis2",
            "lambda_31:-4:4:9",
            "-o",
            path,
            "--jobs",
            jobs,
        ])
        .0
    };
    let runs = [
        ("1", out("a.csv")),
        ("1", out("b.csv")),
        ("8", out("c.csv")),
    ];
    for (jobs, path) in &runs {
        if scan(jobs, path) != 0 {
            fails.push(format!("scan --jobs {jobs} failed"));
        }
    }
    let bytes: Vec<Vec<u8>> = runs
        .iter()
        .map(|(_, p)| std::fs::read(p).unwrap_or_default())
        .collect();
    if bytes[0] != bytes[1] || bytes[0] != bytes[2] {
        fails.push("scan CSV differs between runs or worker counts".into());
    }
    let text = String::from_utf8_lossy(&bytes[0]);
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != 118 || lines.first() != Some(&"axis1,axis2,verdict,certificate,confidence") {
        fails.push(format!("scan has {} lines", lines.len()));
    }
    if !lines.iter().any(|l| l.starts_with("-4,0,2,")) {
        fails.push("row (λ22=−4, λ31=0) is not indefinite".into());
    }
    let small = out("small.csv");
    cli(&[
        "scan",
        "higgs_scan_base.json",
        "--axis1",
        "lambda_H20:-2:2:2",
        "--axis2",
        "lambda_22:0:1:2",
        "-o",
        &small,
    ]);
    let n = std::fs::read_to_string(&small)
        .map(|s| s.lines().count())
        .unwrap_or(0);
    if n != 5 {
        fails.push(format!("2×2 scan has {n} lines"));
    }
    let unwritable = out("no/such/dir/x.csv");
    if scan("2", &unwritable) != 66 {
        fails.push("unwritable output did not exit 66".into());
    }
    let (code, _, _) = cli(&[
        "scan",
        "scan_base.json",
        "--axis1",
        "lambda_H:0:1:3",
        "--axis2",
        "lambda_31:0:1:3",
        "-o",
        &small,
    ]);
    if code != 64 {
        fails.push(format!("invalid axis exit {code}"));
    }
    check(
        fails.is_empty(),
        if fails.is_empty() {
            "exit codes, certificates, diagnostics, scan determinism (1 vs 8 workers)".into()
        } else {
            fails.join("; ")
        },
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "quartic criterion agrees with critical-point minimum",
            quartic_vs_oracle,
        ),
        ("knife-edge fixtures decided exactly", knife_edges),
        ("discriminant equals 6912(I³ − 27J²)", discriminant_identity),
        ("tensor-entry and coupling forms agree", tensor_vs_couplings),
        (
            "three-field classifier agrees with sphere minimum",
            three_field_vs_oracle,
        ),
        (
            "no analytic false positives for mixed-sign portal",
            indefinite_m_honesty,
        ),
        ("primed couplings equal 4λH·V̄ − M²", primed_identity),
        ("verdicts invariant under scaling", invariance),
        ("command-line contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = run();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail} ({secs:.1}s)", i + 1)
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
