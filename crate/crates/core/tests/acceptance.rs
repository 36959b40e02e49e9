//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::fs;
use std::process::{Command, Output};
use std::time::Instant;

use common::exact_kummer;
use lsum::closed::{BlockFamily, HyperBlock};
use lsum::gamma::{gamma, pochhammer, rgamma, sin_pi};
use lsum::kummer::{kummer_special, KummerCase, KummerVariant};
use lsum::verify::rel_err;
use lsum::{
    bessel_special, lemma_sum, oracle_sum, pfq_eval, s0_closed, sm_closed, sm_split, Dispatch,
    SeriesConfig, Sign, SumSpec, Variant,
};

const NUS: [f64; 3] = [0.3, 0.5, 1.7];
const FS: [f64; 2] = [0.7, 2.3];
const XS: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];

/// Worst error seen and the points that broke the tolerance.
struct Tally {
    tol: f64,
    worst: f64,
    checked: usize,
    bad: Vec<String>,
}

impl Tally {
    fn new(tol: f64) -> Self {
        Self {
            tol,
            worst: 0.0,
            checked: 0,
            bad: Vec::new(),
        }
    }

    fn check(&mut self, what: impl FnOnce() -> String, err: f64) {
        self.checked += 1;
        if err.is_nan() || err > self.tol {
            self.bad.push(format!("{} (err {err:e})", what()));
        }
        if err > self.worst {
            self.worst = err;
        }
    }

    fn fail(&mut self, what: String) {
        self.checked += 1;
        self.bad.push(what);
    }

    fn ok(&self) -> bool {
        self.bad.is_empty() && self.checked > 0
    }

    fn summary(&self) -> String {
        format!(
            "{} checks, worst {:.2e}, tol {:e}",
            self.checked, self.worst, self.tol
        )
    }
}

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn grid(ms: &[u32], keep: impl Fn(&SumSpec) -> bool) -> Vec<SumSpec> {
    let mut out = Vec::new();
    for v in Variant::ALL {
        for &m in ms {
            for p in 0..=4 {
                for nu in NUS {
                    for f in FS {
                        for x in XS {
                            let s = SumSpec::new(v, m, p, nu, f, x);
                            if s.validate_closed().is_ok() && keep(&s) {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn label(s: &SumSpec) -> String {
    format!(
        "{} m={} p={} nu={} f={} x={}",
        s.variant().label(),
        s.m,
        s.p,
        s.nu,
        s.f,
        s.x
    )
}

/// Closed and intermediate routes against the oracle.
fn three_way(specs: &[SumSpec], closed: impl Fn(&SumSpec) -> lsum::Result<f64>) -> Tally {
    let mut t = Tally::new(1e-9);
    for s in specs {
        let oracle = match oracle_sum(s, &cfg()) {
            Ok(o) => o.value,
            Err(e) => {
                t.fail(format!("{}: oracle {e}", label(s)));
                continue;
            }
        };
        match closed(s) {
            Ok(v) => t.check(|| format!("{} closed", label(s)), rel_err(v, oracle)),
            Err(e) => t.fail(format!("{}: closed {e}", label(s))),
        }
        match lemma_sum(s, &cfg()) {
            Ok(v) => t.check(|| format!("{} lemma", label(s)), rel_err(v.value, oracle)),
            Err(e) => t.fail(format!("{}: lemma {e}", label(s))),
        }
    }
    t
}

fn criterion_1() -> Tally {
    let start = Instant::now();
    let specs = grid(&[0], |_| true);
    let mut t = three_way(&specs, |s| s0_closed(s, &cfg()).map(|r| r.value));
    for s in &specs {
        if Dispatch::for_spec(s) != Dispatch::S0 {
            t.fail(format!("{}: dispatch {}", label(s), Dispatch::for_spec(s)));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 10.0 {
        t.fail(format!("runtime {secs:.1} s"));
    }
    t
}

fn criterion_2() -> Tally {
    let specs = grid(&[1, 2, 3], |s| s.sign_p == Sign::Plus || s.p >= s.m);
    three_way(&specs, |s| sm_closed(s, &cfg()).map(|r| r.value))
}

fn criterion_3() -> Tally {
    let mut t = Tally::new(1e-9);
    for (m, p) in [(2, 1), (3, 1), (3, 2), (2, 0), (1, 0)] {
        for sign_nu in [Sign::Plus, Sign::Minus] {
            for nu in NUS {
                for f in FS {
                    for x in XS {
                        let s = SumSpec {
                            m,
                            p,
                            sign_nu,
                            sign_p: Sign::Minus,
                            nu,
                            f,
                            x,
                        };
                        if s.validate_closed().is_err() {
                            continue;
                        }
                        match (sm_split(&s, &cfg()), oracle_sum(&s, &cfg())) {
                            (Ok(a), Ok(b)) => t.check(|| label(&s), rel_err(a.value, b.value)),
                            (a, b) => {
                                t.fail(format!("{}: {:?} / {:?}", label(&s), a.err(), b.err()))
                            }
                        }
                    }
                }
            }
        }
    }
    t
}

fn criterion_4() -> Tally {
    let mut t = Tally::new(1e-11);
    for v in KummerVariant::ALL {
        for nu in [0.3, 0.5, 1.25, 2.8] {
            for j in 0..=6 {
                for n in 0..=25 {
                    let case = KummerCase::new(v, n, nu, j);
                    if case.validate().is_err() {
                        continue;
                    }
                    let what = || format!("{v} n={n} nu={nu} j={j}");
                    match kummer_special(&case) {
                        Ok(got) if got.is_finite() => {
                            t.check(what, rel_err(got, exact_kummer(v, n, nu, j)))
                        }
                        Ok(got) => t.fail(format!("{}: {got}", what())),
                        Err(e) => t.fail(format!("{}: {e}", what())),
                    }
                }
            }
        }
    }
    t
}

fn criterion_5() -> Tally {
    let mut t = Tally::new(1e-12);
    for s in grid(&[0], |_| true) {
        match (sm_closed(&s, &cfg()), s0_closed(&s, &cfg())) {
            (Ok(a), Ok(b)) => t.check(|| label(&s), rel_err(a.value, b.value)),
            (a, b) => t.fail(format!("{}: {:?} / {:?}", label(&s), a.err(), b.err())),
        }
    }
    t
}

fn criterion_6() -> Tally {
    let mut t = Tally::new(1e-10);
    for nu in [0.5, 1.5] {
        for f in [0.8, 2.0] {
            for x in [0.3, 0.7, 1.5] {
                let s = SumSpec::new(Variant::PlusNuPlusP, 1, 0, nu, f, x);
                let b = bessel_special(nu, f, x, &cfg()).map(|r| r.value);
                let c = sm_closed(&s, &cfg()).map(|r| r.value);
                let o = oracle_sum(&s, &cfg()).map(|r| r.value);
                match (b, c, o) {
                    (Ok(b), Ok(c), Ok(o)) => {
                        t.check(|| format!("{} vs closed", label(&s)), rel_err(b, c));
                        t.check(|| format!("{} vs oracle", label(&s)), rel_err(b, o));
                    }
                    _ => t.fail(format!("{}: evaluation error", label(&s))),
                }
            }
        }
    }
    t
}

fn criterion_7() -> Tally {
    let mut t = Tally::new(1e-12);
    let points = [
        (0, 0, 0.3, 0.5),
        (1, 1, 0.5, 2.0),
        (1, 2, 0.5, 1.0),
        (2, 3, 1.7, 2.0),
        (3, 4, 1.7, 0.1),
        (0, 4, 0.3, 5.0),
    ];
    for (s, p, nu, x) in points {
        let what = format!("s={s} p={p} nu={nu} x={x}");
        let full = HyperBlock::new(BlockFamily::Shifted, 5, 0, s, p, nu).unwrap();
        let reduced = HyperBlock::new(BlockFamily::Zero, 5, 0, s, p, nu).unwrap();
        let (fa, fb) = full.parameters();
        let (ra, rb) = reduced.parameters();
        if (fa.len(), fb.len(), ra.len(), rb.len()) != (5, 6, 3, 4) {
            t.fail(format!(
                "{what}: orders {}/{} and {}/{}",
                fa.len(),
                fb.len(),
                ra.len(),
                rb.len()
            ));
            continue;
        }
        for pair in [0.5 + 0.5 * nu, 1.0 + 0.5 * nu] {
            if !fa.contains(&pair) || !fb.contains(&pair) {
                t.fail(format!("{what}: no cancelling pair at {pair}"));
            }
        }
        match (
            pfq_eval(&full.spec(x), &cfg()),
            pfq_eval(&reduced.spec(x), &cfg()),
        ) {
            (Ok(a), Ok(b)) => t.check(|| what.clone(), rel_err(a.value, b.value)),
            (a, b) => t.fail(format!("{what}: {:?} / {:?}", a.err(), b.err())),
        }
    }
    t
}

fn criterion_8() -> Tally {
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    let mut t = Tally::new(1e-12);
    let bases = [-4.7, -2.3, -0.45, 0.15, 0.5, 1.0, 1.9, 3.3, 6.25, 11.6];
    for a in bases {
        for n in 0..=12 {
            let lhs = pochhammer(a, n) * rgamma(a + n as f64);
            t.check(|| format!("shift a={a} n={n}"), rel(lhs, rgamma(a)));
        }
        for n in 0..=10u32 {
            let four = 4f64.powi(n as i32);
            let even = four * pochhammer(0.5 * a, n) * pochhammer(0.5 * a + 0.5, n);
            t.check(
                || format!("even dup a={a} n={n}"),
                rel(pochhammer(a, 2 * n), even),
            );
            let odd = four * a * pochhammer(0.5 * a + 0.5, n) * pochhammer(0.5 * a + 1.0, n);
            t.check(
                || format!("odd dup a={a} n={n}"),
                rel(pochhammer(a, 2 * n + 1), odd),
            );
        }
    }
    for k in 1..20 {
        let x = k as f64 / 20.0;
        let v = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * sin_pi(x) / std::f64::consts::PI;
        t.check(|| format!("reflection x={x}"), (v - 1.0).abs());
    }
    for k in 1..=12u32 {
        for n in (k + 1)..=(k + 4) {
            let v = pochhammer(-(k as f64), n);
            t.check(
                || format!("pochhammer(-{k}, {n}) = {v}"),
                if v == 0.0 { 0.0 } else { f64::INFINITY },
            );
        }
    }
    for k in 0..=40 {
        let v = rgamma(-(k as f64));
        let exact = v.to_bits() == 0.0f64.to_bits() || v.to_bits() == (-0.0f64).to_bits();
        t.check(
            || format!("rgamma(-{k}) = {v}"),
            if exact { 0.0 } else { f64::INFINITY },
        );
    }
    t
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsum"))
        .args(args)
        .output()
        .expect("spawn lsum")
}

fn criterion_9() -> Tally {
    let mut t = Tally::new(0.0);
    let dir = tempfile::tempdir().expect("tempdir");
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let write = |name: &str, text: &str| fs::write(dir.path().join(name), text).expect("write");

    // nu = 1 puts several denominators on poles
    write(
        "grid.txt",
        "nu_values = 0.5, 1.0\nf_values = 1.5\nx_values = 0.5, 2.0\nm_max = 2\np_max = 2\n",
    );
    let mut expect_code = |what: &str, out: &Output, code: i32| {
        let got = out.status.code();
        t.check(
            || format!("{what}: exit {got:?}, wanted {code}"),
            if got == Some(code) { 0.0 } else { 1.0 },
        );
    };

    let a = run(&[
        "verify",
        "--grid",
        &path("grid.txt"),
        "--out",
        &path("a.csv"),
    ]);
    let b = run(&[
        "verify",
        "--grid",
        &path("grid.txt"),
        "--out",
        &path("b.csv"),
    ]);
    expect_code("verify", &a, 0);
    expect_code("verify again", &b, 0);
    let (ca, cb) = (
        fs::read(path("a.csv")).unwrap_or_default(),
        fs::read(path("b.csv")).unwrap_or_default(),
    );

    let rows = String::from_utf8_lossy(&ca).lines().skip(1).count();
    let skipped = String::from_utf8_lossy(&ca)
        .lines()
        .filter(|l| l.contains(",skipped-invalid: "))
        .count();
    let names_pole = String::from_utf8_lossy(&ca)
        .contains("skipped-invalid: 1+nu-p = 0 is (near) a non-positive integer");
    let summary = String::from_utf8_lossy(&a.stderr).into_owned();

    expect_code(
        "verify, tol 1e-30",
        &run(&[
            "verify",
            "--grid",
            &path("grid.txt"),
            "--tol",
            "1e-30",
            "--out",
            &path("c.csv"),
        ]),
        1,
    );
    write("empty.txt", "x_values =\n");
    let empty = run(&["verify", "--grid", &path("empty.txt")]);
    expect_code("empty list", &empty, 2);
    expect_code(
        "table, empty list",
        &run(&["table", "--grid", &path("empty.txt")]),
        2,
    );
    expect_code(
        "missing grid",
        &run(&["verify", "--grid", &path("absent.txt")]),
        2,
    );
    write("bad.txt", "m_max = -1\n");
    expect_code(
        "negative count",
        &run(&["verify", "--grid", &path("bad.txt")]),
        2,
    );
    expect_code(
        "bad format",
        &run(&["verify", "--grid", &path("grid.txt"), "--format", "xml"]),
        2,
    );
    let pole = run(&[
        "eval", "--m", "1", "--p", "2", "--sign-p", "-", "--nu", "1", "--x", "0.5",
    ]);
    expect_code("eval on a pole", &pole, 2);
    expect_code(
        "eval, bad sign",
        &run(&["eval", "--sign-nu", "x", "--nu", "0.5", "--x", "1"]),
        2,
    );
    expect_code(
        "eval, bad number",
        &run(&["eval", "--nu", "abc", "--x", "1"]),
        2,
    );
    let eval = run(&[
        "eval",
        "--m",
        "0",
        "--p",
        "0",
        "--sign-nu",
        "+",
        "--sign-p",
        "+",
        "--nu",
        "0.5",
        "--f",
        "2",
        "--x",
        "0",
    ]);
    expect_code("eval", &eval, 0);

    if ca.is_empty() || ca != cb {
        t.fail("verify output is not byte-identical across runs".into());
    }
    // 2 nu x 1 f x 2 x x 3 m x 3 p x 4 variants
    if rows != 144 {
        t.fail(format!("{rows} rows, wanted 144"));
    }
    if skipped == 0 || !names_pole {
        t.fail("no skipped-invalid rows naming the violated invariant".into());
    }
    if !summary.contains(&format!("/0/{skipped}")) {
        t.fail(format!(
            "summary line {summary:?} does not account for {skipped} skipped rows"
        ));
    }
    if !String::from_utf8_lossy(&empty.stderr).contains("x_values must be non-empty") {
        t.fail("empty list message".into());
    }
    if !String::from_utf8_lossy(&pole.stderr).contains("1+nu-p") {
        t.fail("invalid spec message does not name the invariant".into());
    }
    if !String::from_utf8_lossy(&eval.stdout).contains("value = 1.0") {
        t.fail("eval at x = 0 does not print value = 1.0".into());
    }
    t
}

type Criterion = (&'static str, fn() -> Tally);

fn main() {
    let criteria: [Criterion; 9] = [
        ("three-way agreement, m = 0", criterion_1),
        ("three-way agreement, m >= 1", criterion_2),
        ("split form against the oracle", criterion_3),
        ("Kummer specializations against exact sums", criterion_4),
        ("shifted form at m = 0 equals the m = 0 form", criterion_5),
        ("Bessel contraction", criterion_6),
        ("5F6 to 3F4 parameter cancellation", criterion_7),
        ("gamma kernel identities", criterion_8),
        ("CLI determinism and exit codes", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let tally = f();
        let verdict = if tally.ok() { "PASS" } else { "FAIL" };
        println!("[{verdict}] {} {name}: {}", i + 1, tally.summary());
        if !tally.ok() {
            failed += 1;
            for b in tally.bad.iter().take(10) {
                println!("       {b}");
            }
            if tally.bad.len() > 10 {
                println!("       ... {} more", tally.bad.len() - 10);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
