//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use b3rep::algebra::{Backend, Scalar};
use b3rep::classify::sampling::{degenerate_spec, psl_spec, random_rational, random_spec, zeta5_twins};
use b3rep::classify::{burnside_oracle, deligne_check, hom_space_dim, is_simple, p_poly, q_closed, q_oracle, westbury_dims};
use b3rep::rep::{
    binomial_identity_check, binomial_identity_check_corrected, binomial_identity_failures, build_binomial_rep, build_rep, normalize_gauge,
    rescale_basis, structure_report, verify_braid, Rep, RepSpec,
};
use b3rep::tensor_dims::{verify_series, y2_star_from_exchange, Series};

type Verdict = Result<(bool, String), String>;
type Criterion = (&'static str, fn() -> Verdict);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn simple_sample(d: usize, n: usize, seed: u64) -> Result<Vec<RepSpec>, String> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let spec = random_spec(d, &mut r, 10).map_err(err)?;
        if is_simple(&spec).map_err(err)?.simple {
            out.push(spec);
        }
    }
    Ok(out)
}

fn c1_braid_symbolic() -> Verdict {
    let mut bad = Vec::new();
    for d in 2..=5 {
        if !verify_braid(&build_rep(&RepSpec::generic(d).map_err(err)?).map_err(err)?) {
            bad.push(d);
        }
    }
    Ok((bad.is_empty(), format!("d=2..5 symbolic; failing dims {bad:?}")))
}

/// The d = 2, 4 reps with squared parameters, so that σ is a Laurent monomial.
fn squared_rep(d: usize) -> Result<(Rep, Scalar), String> {
    let names: &[&str] = if d == 2 { &["m1", "m2"] } else { &["m1", "m2", "m3", "n"] };
    let b = Backend::symbolic(names).map_err(err)?;
    let v = |s: &str| b.variable(s).unwrap();
    let sq = |s: &str| &v(s) * &v(s);
    if d == 2 {
        let rep = build_rep(&RepSpec::classified(vec![sq("m1"), sq("m2")], None).map_err(err)?).map_err(err)?;
        Ok((rep, (&v("m1") * &v("m2")).powi(3).map_err(err)?))
    } else {
        let spec = RepSpec::classified_derived(vec![sq("m1"), sq("m2"), sq("m3")], sq("n")).map_err(err)?;
        let sigma = (&v("m2") * &v("m3")).try_div(&v("n")).map_err(err)?.powi(3).map_err(err)?;
        Ok((build_rep(&spec).map_err(err)?, sigma))
    }
}

fn c2_structure() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    for d in 2..=5 {
        let rep = build_rep(&RepSpec::generic(d).map_err(err)?).map_err(err)?;
        let r = structure_report(&rep).map_err(err)?;
        ok &= r.all_ok();
        notes.push(format!("d={d} identities={} constructed-basis normal form={}", r.all_ok(), r.normalized));
        if d % 2 == 1 {
            ok &= r.normalized;
        }
    }
    for d in [2, 4] {
        let (rep, sigma) = squared_rep(d)?;
        let normal = normalize_gauge(&rep, &sigma).map_err(err)?;
        let r = structure_report(&normal).map_err(err)?;
        ok &= r.all_ok() && r.normalized;
        notes.push(format!("d={d} after diagonal gauge: normal form={}", r.normalized));
    }
    Ok((ok, notes.join("; ")))
}

fn q_agree(rep: &Rep) -> Result<bool, String> {
    let spec = &rep.spec;
    let d = spec.dim();
    let g = spec.gamma();
    for r in 0..d {
        for s in 0..d {
            if r != s && q_closed(r, s, spec.eigenvalues(), g.as_ref()).map_err(err)? != q_oracle(rep, r, s).map_err(err)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn c3_q_cross_oracle() -> Verdict {
    let mut ok = true;
    for d in [2, 3] {
        ok &= q_agree(&build_rep(&RepSpec::generic(d).map_err(err)?).map_err(err)?)?;
    }
    let mut r = rng(3);
    let mut count = 0;
    for d in [4, 5] {
        for _ in 0..100 {
            let rep = build_rep(&random_spec(d, &mut r, 10).map_err(err)?).map_err(err)?;
            ok &= q_agree(&rep)?;
            count += 1;
        }
    }
    Ok((
        ok,
        format!(
            "symbolic d=2,3; {count} rational instances d=4,5; normalization: Q2 = -(lr^2-lr*ls+ls^2), Q4 carries -1/gamma^2, Q5 carries 1/gamma^8 (gamma^2 = l2*l3/D for d=4)"
        ),
    ))
}

fn c4_burnside() -> Verdict {
    let mut r = rng(4);
    let mut total = 0;
    let mut degenerate = 0;
    let mut disagreements = 0;
    for d in 2..=5 {
        let mut specs = Vec::new();
        for _ in 0..200 {
            specs.push(random_spec(d, &mut r, 10).map_err(err)?);
        }
        for _ in 0..25 {
            specs.push(degenerate_spec(d, &mut r, 10).map_err(err)?);
            degenerate += 1;
        }
        for spec in specs {
            let simple = is_simple(&spec).map_err(err)?.simple;
            let oracle = burnside_oracle(&build_rep(&spec).map_err(err)?).map_err(err)?;
            total += 1;
            disagreements += usize::from(simple != oracle);
        }
    }
    Ok((disagreements == 0, format!("{total} instances ({degenerate} degenerate), {disagreements} disagreements")))
}

fn palindromic_diag(d: usize, r: &mut ChaCha8Rng) -> Vec<Scalar> {
    let half: Vec<Scalar> = (0..d.div_ceil(2)).map(|_| random_rational(r, 10)).collect();
    (0..d).map(|i| half[i.min(d - 1 - i)].clone()).collect()
}

fn c5_uniqueness() -> Verdict {
    let mut r = rng(5);
    let mut ok = true;
    let mut checked = 0;
    for d in 2..=5 {
        for spec in simple_sample(d, 20, 50 + d as u64)? {
            let rep = build_rep(&spec).map_err(err)?;
            let other = rescale_basis(&rep, &palindromic_diag(d, &mut r)).map_err(err)?;
            ok &= hom_space_dim(&rep, &other).map_err(err)? == 1;
            checked += 1;
        }
    }
    let mut twins = 0;
    for spec in simple_sample(5, 20, 55)? {
        let (a, b) = zeta5_twins(&spec).map_err(err)?;
        let hom = hom_space_dim(&build_rep(&a).map_err(err)?, &build_rep(&b).map_err(err)?).map_err(err)?;
        ok &= hom == 0;
        twins += 1;
    }
    Ok((ok, format!("{checked} rescaled pairs with Hom = 1; {twins} d=5 pairs (gamma, zeta5*gamma) over Q(zeta5) with Hom = 0")))
}

fn c6_min_poly_rank_one() -> Verdict {
    let mut ok = true;
    let mut n = 0;
    for d in 2..=5 {
        for spec in simple_sample(d, 20, 60 + d as u64)? {
            let rep = build_rep(&spec).map_err(err)?;
            ok &= rep.a.min_poly().coefficients() == rep.a.char_poly().coefficients();
            for k in 0..d {
                ok &= p_poly(k, spec.eigenvalues()).map_err(err)?.eval_matrix(&rep.a).map_err(err)?.rank() == 1;
            }
            n += 1;
        }
    }
    Ok((ok, format!("{n} simple instances")))
}

fn c7_exceptional() -> Verdict {
    let rep = verify_series(Series::Exceptional).map_err(err)?;
    let mut parts: Vec<String> =
        rep.reports.iter().map(|r| format!("{}={}{}", r.summand, r.equal, if r.convention.sign_flip { " (sign flipped)" } else { "" })).collect();
    parts.extend(rep.checks.iter().map(|c| format!("[{}: {}]", c.name, c.ok)));
    let (a, swapped) = y2_star_from_exchange().map_err(err)?;
    parts.push(format!("Y2* from route a = -(Y2 with t<->s/t): {}", a == swapped.neg()));
    Ok((rep.all_equal(), parts.join(", ")))
}

fn c8_bcd() -> Verdict {
    let rep = verify_series(Series::Bcd).map_err(err)?;
    let parts: Vec<String> = rep.reports.iter().map(|r| format!("{}={}", r.summand, r.equal)).collect();
    Ok((rep.all_equal(), parts.join(", ")))
}

fn c9_binomial() -> Verdict {
    let mut r = rng(9);
    let mut braid_ok = true;
    for n in 3..=8 {
        for _ in 0..3 {
            let mut l = vec![Backend::Rational.zero(); n];
            let c = if n % 2 == 1 {
                let m = random_rational(&mut r, 10);
                l[n / 2] = m.clone();
                &m * &m
            } else {
                random_rational(&mut r, 10)
            };
            for i in 0..n / 2 {
                l[i] = random_rational(&mut r, 10);
                l[n - 1 - i] = c.try_div(&l[i]).map_err(err)?;
            }
            braid_ok &= verify_braid(&build_binomial_rep(l, c).map_err(err)?);
        }
    }
    let failing: Vec<usize> = (0..=12).filter(|&d| !binomial_identity_check(d)).collect();
    let corrected = (0..=12).all(binomial_identity_check_corrected);
    let first = (1..=12).find_map(|d| binomial_identity_failures(d).first().map(|&(i, j)| (d, i, j)));
    Ok((
        braid_ok && failing.is_empty(),
        format!(
            "braid sizes 3..8: {braid_ok}; identity with RHS (-1)^i C(d-i, d-j) fails for d in {failing:?} (first (d,i,j) = {first:?}); with RHS (-1)^i C(d-i, j): {corrected}"
        ),
    ))
}

fn c10_deligne() -> Verdict {
    let mut r = rng(10);
    let (mut certified, mut simple_uncertified, mut violations) = (0, 0, 0);
    for k in 0..500 {
        let d = 2 + k % 4;
        // Small parameters make coincidences among eigenvalue products common.
        let spec = random_spec(d, &mut r, 2).map_err(err)?;
        let simple = is_simple(&spec).map_err(err)?.simple;
        let cert = deligne_check(&spec).map_err(err)?.certificate;
        certified += usize::from(cert);
        violations += usize::from(cert && !simple);
        simple_uncertified += usize::from(simple && !cert);
    }
    Ok((
        violations == 0 && simple_uncertified > 0,
        format!("500 instances: {certified} certified, {violations} certified but not simple, {simple_uncertified} simple without certificate"),
    ))
}

fn c11_westbury() -> Verdict {
    let mut r = rng(11);
    let mut ok = true;
    let mut n = 0;
    let mut attempts = 0;
    while n < 24 && attempts < 1000 {
        attempts += 1;
        let d = 2 + attempts % 4;
        let spec = psl_spec(d, &mut r, 10).map_err(err)?;
        if !is_simple(&spec).map_err(err)?.simple {
            continue;
        }
        let rep = build_rep(&spec).map_err(err)?;
        let w = westbury_dims(&rep, &rep.backend().one()).map_err(err)?;
        ok &= w.sums_ok(d) && w.inequality_ok();
        n += 1;
    }
    Ok((ok && n >= 20, format!("{n} simple PSL(2,Z) instances over Q(zeta6)")))
}

fn run_cli(args: &[&str], stdin: Option<&[u8]>) -> Result<(Option<i32>, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_b3rep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(err)?;
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s).map_err(err)?;
    }
    drop(child.stdin.take());
    let o = child.wait_with_output().map_err(err)?;
    Ok((o.status.code(), o.stdout))
}

fn c12_cli() -> Verdict {
    let mut ok = true;
    for d in ["2", "3", "4", "5"] {
        for extra in [&["--symbolic"][..], &[][..]] {
            let mut args = vec!["construct", "--dim", d];
            let concrete: Vec<&str> = match d {
                "2" => vec!["--eig", "2", "--eig", "-3"],
                "3" => vec!["--eig", "2", "--eig", "3", "--eig", "5"],
                "4" => vec!["--eig", "2", "--eig", "3", "--eig", "5", "--D", "7"],
                _ => vec!["--eig", "2", "--eig", "3", "--eig", "5", "--eig", "7", "--gamma", "2"],
            };
            if extra.is_empty() {
                args.extend(concrete);
            } else {
                args.extend(extra);
            }
            let (code, out) = run_cli(&args, None)?;
            ok &= code == Some(0);
            let (code, _) = run_cli(&["verify"], Some(&out))?;
            ok &= code == Some(0);
        }
    }
    let scan = ["scan", "--dim", "4", "--count", "50", "--degenerate", "5", "--seed", "12"];
    let (c1, a) = run_cli(&scan, None)?;
    let (c2, b) = run_cli(&scan, None)?;
    let same = c1 == Some(0) && c2 == Some(0) && a == b && !a.is_empty();
    Ok((ok && same, format!("construct|verify for d=2..5 (symbolic and rational): {ok}; repeated seeded scan byte-identical: {same}")))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("braid relation, symbolic", c1_braid_symbolic),
        ("structure identities", c2_structure),
        ("Q closed form vs matrix oracle", c3_q_cross_oracle),
        ("simplicity vs Burnside", c4_burnside),
        ("uniqueness up to isomorphism", c5_uniqueness),
        ("minimal = characteristic polynomial, rank-one P_r(A)", c6_min_poly_rank_one),
        ("exceptional-series dimensions", c7_exceptional),
        ("BCD dimensions", c8_bcd),
        ("binomial family", c9_binomial),
        ("determinant criterion is one-directional", c10_deligne),
        ("eigenspace inequality", c11_westbury),
        ("CLI determinism and round-trip", c12_cli),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (pass, detail) = match f() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        let secs = t.elapsed().as_secs_f64();
        println!("criterion {:>2} {}: {name} ({secs:.1}s) -- {detail}", i + 1, if pass { "PASS" } else { "FAIL" });
        if !pass {
            failed.push(i + 1);
        }
    }
    println!("acceptance: {} of 12 passed; failed {:?}", 12 - failed.len(), failed);
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
