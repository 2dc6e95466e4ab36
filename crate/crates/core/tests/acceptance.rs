//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured margins. Run with `--nocapture` to see them:
//!
//!   cargo test -p loewner-ps-core --test acceptance -- --nocapture

use loewner_ps::inequalities::{
    chernoff_q, ps_verify, rank_one_probe, sweep_pair, PsReport, SweepConfig,
};
use loewner_ps::linalg::random::{random_psd_from, random_symmetric_dense, seeded_rng, substream};
use loewner_ps::tracial::{
    abs_dominance_witness, projection_pair, projection_triple, subadditivity_witness,
    trace_test_ps, ViolationStatus,
};
use loewner_ps::{
    check_n_monotone, eigh, is_psd, loewner, pos_neg_parts, registry_get, standard_positive_specs,
    transform_neg_inv, Functional, PsdSpectrum, SymMatrix, Tolerance, VerdictStatus,
};

const SWEEP_SEED: u64 = 42;
const SWEEP_TRIALS: usize = 1000;
const SWEEP_TOL: f64 = 1e-8;
const SINGULAR_PROB: f64 = 0.25;

fn sweep_dims() -> Vec<usize> {
    (1..=6).collect()
}

#[test]
fn criterion_01_probe_reproduction() {
    let p = rank_one_probe(1.0, 4.0).unwrap();
    let a = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
    let b = SymMatrix::from_rows(&[vec![1.0, -2.0], vec![-2.0, 4.0]]).unwrap();
    assert_eq!(p.a, a);
    assert_eq!(p.b, b);
    assert_eq!(p.abs_diff, SymMatrix::diag(&[4.0, 4.0]));
    assert_eq!(p.factor, 0.36);
    let bound = 1e-9 * 5.0;
    for (spec, residual) in &p.residuals {
        assert!(
            *residual <= bound,
            "{spec}: residual {residual:.3e} exceeds {bound:.3e}"
        );
    }
    println!(
        "criterion 1 PASS: probe(1,4) closed forms exact, max residual {:.3e} <= {:.1e} over {} functions",
        p.max_residual(),
        bound,
        p.residuals.len()
    );
}

fn run_sweep() -> Vec<PsReport> {
    let cfg = SweepConfig {
        specs: standard_positive_specs(),
        dims: sweep_dims(),
        trials: SWEEP_TRIALS,
        seed: SWEEP_SEED,
        singular_probability: SINGULAR_PROB,
        tol_rel: SWEEP_TOL,
    };
    loewner_ps::inequalities::ps_sweep(&cfg, None).unwrap()
}

#[test]
fn criterion_02_main_inequality_sweep() {
    let rows = run_sweep();
    assert_eq!(rows.len(), 13 * 6 * SWEEP_TRIALS);
    let violations: Vec<&PsReport> = rows.iter().filter(|r| !r.holds).collect();
    assert!(
        violations.is_empty(),
        "sweep violations: {:?}",
        violations
            .iter()
            .map(|r| (&r.function_spec, r.dimension, r.seed, r.gap))
            .collect::<Vec<_>>()
    );
    let worst_gap = rows.iter().map(|r| r.gap).fold(f64::INFINITY, f64::min);
    println!(
        "criterion 2 PASS: {} sweep instances hold at tol 1e-8*(|lhs|+|rhs|+1); most negative gap {worst_gap:.3e}",
        rows.len()
    );
}

#[test]
fn criterion_03_cubic_counterexample() {
    let phi = Functional::trace(1);
    let f = registry_get("cubic").unwrap();
    let a = SymMatrix::diag(&[1.0]);
    let b = SymMatrix::diag(&[2.0]);
    let rep = ps_verify(&phi, &f, &a, &b, SWEEP_TOL).unwrap();
    assert!((rep.lhs - 2.0).abs() < 1e-12);
    assert!((rep.rhs - 0.5).abs() < 1e-12);
    assert!(!rep.holds);
    println!(
        "criterion 3 PASS: cubic at (1,2) yields lhs {} > rhs {} (violation reproduced)",
        rep.lhs, rep.rhs
    );
}

#[test]
fn criterion_04_power_family_trace_identity() {
    // trace cyclicity oracle: Tr(f(A)^{1/2} g(B) f(A)^{1/2}) = Tr(A^s B^{1-s})
    let phi_cache: Vec<Functional> = (0..=6).map(Functional::trace).collect();
    let mut worst: f64 = 0.0;
    let mut checked = 0usize;
    for k in 1..=9 {
        let s = k as f64 / 10.0;
        let f = registry_get(&format!("power:0.{k}")).unwrap();
        for &dim in &sweep_dims() {
            for trial in 0..SWEEP_TRIALS {
                let (a, b) = sweep_pair(SWEEP_SEED, dim, trial, SINGULAR_PROB);
                let rhs = loewner_ps::inequalities::ps_rhs(&phi_cache[dim], &f, &a, &b).unwrap();
                let sandwich_trace = rhs / 2.0;
                let a_pow = PsdSpectrum::new(&a).unwrap().power(s).to_dense();
                let b_pow = PsdSpectrum::new(&b).unwrap().power(1.0 - s).to_dense();
                let direct = a_pow.trace_product(&b_pow);
                let err = (sandwich_trace - direct).abs();
                assert!(
                    err <= 1e-9 * direct.abs().max(f64::MIN_POSITIVE),
                    "power:0.{k} dim {dim} trial {trial}: {sandwich_trace} vs {direct}"
                );
                if direct.abs() > 0.0 {
                    worst = worst.max(err / direct.abs());
                }
                checked += 1;
            }
        }
    }
    println!(
        "criterion 4 PASS: {checked} instances match Tr(A^s B^(1-s)) to relative 1e-9 (worst {worst:.3e})"
    );
}

#[test]
fn criterion_05_monotonicity_verdicts() {
    let domain = (1e-2, 1e2);
    let trials = 10_000;

    for spec in ["cubic", "square"] {
        let f = registry_get(spec).unwrap();
        let v = check_n_monotone(&f, 2, (0.5, 4.0), trials, SWEEP_SEED).unwrap();
        assert_eq!(
            v.status,
            VerdictStatus::CertifiedNot,
            "{spec} should fail 2-monotonicity"
        );
        let w = v.witness.unwrap();
        let l = loewner(&f, &w.points).unwrap();
        assert!(!is_psd(l.matrix(), &Tolerance::default()).unwrap().is_psd);
    }

    let monotone_specs = [
        "power:0.25",
        "power:0.5",
        "power:0.75",
        "mobius:0.5",
        "mobius:1",
        "mobius:2",
        "logshift",
        "identity",
    ];
    for spec in monotone_specs {
        let f = registry_get(spec).unwrap();
        for order in 1..=6 {
            let v = check_n_monotone(&f, order, domain, trials, SWEEP_SEED).unwrap();
            assert_eq!(
                v.status,
                VerdictStatus::NoCounterexample,
                "{spec} at order {order}: {:?}",
                v.witness
            );
            assert_eq!(v.samples_used, trials);
        }
    }
    println!(
        "criterion 5 PASS: cubic/square CERTIFIED_NOT at order 2; {} monotone functions clean through order 6 at 10^4 samples",
        monotone_specs.len()
    );
}

#[test]
fn criterion_06_neg_inv_hadamard_mechanism() {
    let mut specs = standard_positive_specs();
    specs.extend(["identity", "cubic", "square"].map(String::from));
    let mut worst: f64 = 0.0;
    let sets_per_fn = 1000 / specs.len() + 1;
    let mut sets = 0usize;
    for spec in &specs {
        let f = registry_get(spec).unwrap();
        let g = transform_neg_inv(&f).unwrap();
        for trial in 0..sets_per_fn as u64 {
            let mut rng = seeded_rng(substream(6006, trial));
            use rand::Rng;
            let n = 2 + (trial % 3) as usize;
            let pts: Vec<f64> = (0..n).map(|_| 0.1 + rng.random::<f64>() * 9.9).collect();
            let lg = loewner(&g, &pts).unwrap();
            let lf = loewner(&f, &pts).unwrap();
            let h = SymMatrix::from_fn(n, |i, j| 1.0 / (f.eval(pts[i]) * f.eval(pts[j])));
            let err = lg.matrix().max_abs_diff(&h.hadamard(lf.matrix()).unwrap());
            assert!(err <= 1e-10, "{spec} trial {trial}: {err:.3e}");
            worst = worst.max(err);
            sets += 1;
        }
    }
    println!(
        "criterion 6 PASS: Hadamard factorization of L(-1/f) matches on {sets} point sets (worst {worst:.3e} <= 1e-10)"
    );
}

#[test]
fn criterion_07_chernoff_consistency() {
    let phi_cache: Vec<Functional> = (0..=6).map(Functional::trace).collect();
    let mut worst_slack = f64::INFINITY;
    for &dim in &sweep_dims() {
        for trial in 0..SWEEP_TRIALS {
            let (a, b) = sweep_pair(SWEEP_SEED, dim, trial, SINGULAR_PROB);
            let abs = pos_neg_parts(&a.sub(&b).unwrap()).unwrap().abs;
            let lhs = phi_cache[dim].apply(&a).unwrap() + phi_cache[dim].apply(&b).unwrap()
                - phi_cache[dim].apply(&abs).unwrap();
            let q = chernoff_q(&a, &b, 1e-6).unwrap();
            assert!(
                lhs / 2.0 <= q.q_value + 1e-6,
                "dim {dim} trial {trial}: lhs/2 = {} vs q = {}",
                lhs / 2.0,
                q.q_value
            );
            worst_slack = worst_slack.min(q.q_value + 1e-6 - lhs / 2.0);
        }
    }

    // golden-section vs 10^4-point brute force on small instances
    let mut worst_brute: f64 = 0.0;
    for &dim in &sweep_dims() {
        for trial in 0..2 {
            let (a, b) = sweep_pair(SWEEP_SEED, dim, trial, SINGULAR_PROB);
            let q = chernoff_q(&a, &b, 1e-6).unwrap();
            let a_spec = PsdSpectrum::new(&a).unwrap();
            let b_spec = PsdSpectrum::new(&b).unwrap();
            let brute = (0..10_000)
                .map(|k| {
                    let s = k as f64 / 9_999.0;
                    let outer = a_spec.power((1.0 - s) / 2.0).to_dense();
                    let mid = b_spec.power(s).to_dense();
                    outer.mul(&mid).trace_product(&outer)
                })
                .fold(f64::INFINITY, f64::min);
            let err = (q.q_value - brute).abs();
            assert!(err <= 1e-6, "dim {dim} trial {trial}: {err:.3e}");
            worst_brute = worst_brute.max(err);
        }
    }

    // Q(A, A) = Tr(A) to 1e-9 relative
    for trial in 0..30u64 {
        let mut rng = seeded_rng(substream(70_000, trial));
        let n = 1 + (trial % 6) as usize;
        let a = random_psd_from(&mut rng, n, 1.0);
        let q = chernoff_q(&a, &a, 1e-6).unwrap();
        let tr = a.trace();
        assert!(
            (q.q_value - tr).abs() <= 1e-9 * tr.abs().max(f64::MIN_POSITIVE),
            "trial {trial}: Q(A,A) = {} vs Tr(A) = {tr}",
            q.q_value
        );
    }
    println!(
        "criterion 7 PASS: lhs/2 <= Q over {} pairs (min slack {worst_slack:.3e}); golden vs brute-force worst {worst_brute:.3e}; Q(A,A) = Tr(A)",
        6 * SWEEP_TRIALS
    );
}

#[test]
fn criterion_08_trace_characterization() {
    // weighted diagonals: violation found in the structured phase alone
    // (zero random trials) for every qualifying registry function
    let mut specs = standard_positive_specs();
    specs.push("identity".to_string());
    for &d in &[0.3, 0.5, 0.7, 0.9] {
        for n in [2, 4] {
            let mut diag = vec![1.0; n];
            diag[0] = d;
            let phi = Functional::new(SymMatrix::diag(&diag)).unwrap();
            for spec in &specs {
                let f = registry_get(spec).unwrap();
                let v = trace_test_ps(&phi, &f, 0, 0).unwrap();
                assert_eq!(
                    v.status,
                    ViolationStatus::ViolationFound,
                    "d = {d}, n = {n}, f = {spec}"
                );
            }
        }
    }

    // scalar multiples of the trace: all three tests clean over 10^4 trials
    let trials = 10_000;
    for &c in &[0.5, 1.0, 2.0] {
        let phi = Functional::new(SymMatrix::scaled_identity(4, c)).unwrap();
        let f = registry_get("power:0.5").unwrap();
        let ps = trace_test_ps(&phi, &f, trials, SWEEP_SEED).unwrap();
        assert_eq!(ps.status, ViolationStatus::NoViolation, "ps at c = {c}");
        let sub = subadditivity_witness(&phi, trials, SWEEP_SEED).unwrap();
        assert_eq!(sub.status, ViolationStatus::NoViolation, "subadd at c = {c}");
        let dom = abs_dominance_witness(&phi, trials, SWEEP_SEED).unwrap();
        assert_eq!(dom.status, ViolationStatus::NoViolation, "absdom at c = {c}");
    }
    println!(
        "criterion 8 PASS: structured-phase violations for d in {{0.3,0.5,0.7,0.9}} across {} functions; c*I clean over 10^4 trials for all three tests",
        specs.len()
    );
}

#[test]
fn criterion_09_projection_demonstration() {
    let t = Tolerance::default();
    let mut worst_identity: f64 = 0.0;
    for trial in 0..1000u64 {
        let n = 2 + (trial % 7) as usize; // up to 8
        let pair = projection_pair(n, substream(90_000, trial)).unwrap();
        let parts = pos_neg_parts(&pair.p.sub(&pair.q).unwrap()).unwrap();
        let lhs_matrix = pair.p.add(&pair.q).unwrap().sub(&parts.abs).unwrap();
        let err = lhs_matrix.max_abs_diff(&pair.meet.scale(2.0));
        assert!(err <= 1e-8, "identity failed at trial {trial}: {err:.3e}");
        worst_identity = worst_identity.max(err);

        let pqp = SymMatrix::sandwich(&pair.p, &pair.q).unwrap();
        let check = is_psd(&pqp.sub(&pair.meet).unwrap(), &t).unwrap();
        assert!(check.is_psd, "pqp - meet not PSD at trial {trial}");

        // the probe quantities never violate the weighted inequality
        let phi = Functional::trace(n);
        let probe = projection_triple(&pair, &phi).unwrap();
        assert!(probe.lhs <= probe.rhs + 1e-8, "trial {trial}");
    }
    println!(
        "criterion 9 PASS: p+q-|p-q| = 2(p^q) to {worst_identity:.3e} <= 1e-8 and pqp >= p^q over 1000 pairs"
    );
}

#[test]
fn criterion_10_numerical_core() {
    // eigendecomposition quality across sizes up to 64
    let sizes = [1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64];
    let mut worst_recon: f64 = 0.0;
    let mut worst_orth: f64 = 0.0;
    for (i, &n) in sizes.iter().enumerate() {
        let reps = if n >= 32 { 3 } else { 8 };
        for rep in 0..reps {
            let mut rng = seeded_rng(substream(100_000 + i as u64, rep));
            let a = random_symmetric_dense(&mut rng, n, 1.0);
            let ed = eigh(&a).unwrap();
            let recon = ed.reconstruct_map(|l| l).max_abs_diff(&a);
            let bound = 1e-10 * a.max_norm().max(1.0);
            assert!(recon <= bound, "n = {n} rep {rep}: {recon:.3e}");
            let orth = ed.eigenvectors().orthogonality_defect();
            assert!(orth <= 1e-10, "n = {n} rep {rep}: {orth:.3e}");
            worst_recon = worst_recon.max(recon / a.max_norm().max(1.0));
            worst_orth = worst_orth.max(orth);
        }
    }

    // Schur-product positivity over 10^3 PSD pairs
    let t = Tolerance::default();
    for trial in 0..1000u64 {
        let mut rng = seeded_rng(substream(200_000, trial));
        let n = 2 + (trial % 7) as usize;
        let a = random_psd_from(&mut rng, n, 1.0);
        let b = random_psd_from(&mut rng, n, 1.0);
        assert!(
            is_psd(&a.hadamard(&b).unwrap(), &t).unwrap().is_psd,
            "Schur positivity failed at trial {trial}"
        );
    }
    println!(
        "criterion 10 PASS: eigh reconstruction worst {worst_recon:.3e}, orthogonality worst {worst_orth:.3e} (bounds 1e-10) up to n = 64; Schur positivity over 1000 pairs"
    );
}
