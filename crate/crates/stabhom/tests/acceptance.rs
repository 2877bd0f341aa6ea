//! Acceptance criteria 1–12. Prints one PASS/FAIL line per criterion and exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use stabhom::laws::{stream_rng, Catalog};
use stabhom::oracle::cocycle_ext_dim;
use stabhom::report::{run_law, LawReport};
use stabhom_core::algebra::{simple, Algebra, Side};
use stabhom_core::catalog::{random_module, Fixture};
use stabhom_core::exactla::Field;
use stabhom_core::homology::ext1;
use stabhom_core::stable::{bass_torsion, tensor_substab, TorsionMethod};

const SEEDS: [u64; 3] = [1, 2, 3];
const COUNT: usize = 50;
const MAX_DIM: usize = 3;

fn field_for(seed: u64) -> Field {
    match seed {
        1 => Field::prime(2).unwrap(),
        2 => Field::prime(5).unwrap(),
        _ => Field::Rational,
    }
}

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

/// Catalogs for every (fixture, seed) pair, the seed also choosing the field.
fn catalogs(fixtures: &[Fixture]) -> Vec<(Fixture, u64, Catalog)> {
    let mut out = Vec::new();
    for &fx in fixtures {
        for seed in SEEDS {
            let alg = fx.build(field_for(seed));
            out.push((fx, seed, Catalog::generate(&alg, seed, COUNT, MAX_DIM)));
        }
    }
    out
}

/// Runs `laws` on every catalog; fails on the first failing law and requires `min_checks`.
fn laws_hold(cats: &[(Fixture, u64, Catalog)], laws: &[&str], min_checks: usize) -> Verdict {
    let mut checks = 0;
    for (fx, seed, cat) in cats {
        for law in laws {
            let LawReport { passed, checks: c, witness, .. } = run_law(cat, law);
            checks += c;
            if !passed {
                return verdict(false, format!("{law} fails on {} seed {seed}: {:?}", fx.name(), witness.map(|w| w.values)));
            }
        }
    }
    if checks < min_checks {
        return verdict(false, format!("only {checks} checks, need {min_checks}"));
    }
    verdict(true, format!("{checks} checks"))
}

/// At the full desk-scale vertex bound of 6.
fn torsion_triple_agreement() -> Verdict {
    let start = Instant::now();
    let mut modules = 0;
    for fx in Fixture::ALL {
        for seed in SEEDS {
            let alg = fx.build(field_for(seed));
            for side in [Side::Left, Side::Right] {
                let mut rng = stream_rng(seed, 100 + side as u64);
                for _ in 0..200 {
                    let m = random_module(&alg, side, 6, &mut rng);
                    let e = bass_torsion(&m, TorsionMethod::Evaluation).unwrap();
                    let r = bass_torsion(&m, TorsionMethod::Reject).unwrap();
                    let a = bass_torsion(&m, TorsionMethod::Approximation).unwrap();
                    if e != r || r != a {
                        return verdict(false, format!("disagreement on {} seed {seed} dims {:?}", fx.name(), m.dims()));
                    }
                    modules += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(elapsed < Duration::from_secs(60), format!("{modules} modules in {:.2}s", elapsed.as_secs_f64()))
}

fn worked_a2_value() -> Verdict {
    let alg: Algebra = Fixture::A2.build(Field::prime(5).unwrap());
    let sr2 = simple(&alg, 1, Side::Right).unwrap();
    let s1 = simple(&alg, 0, Side::Left).unwrap();
    let s2 = simple(&alg, 1, Side::Left).unwrap();
    let coequalizer_kernel = tensor_substab(&sr2, &s2).unwrap().dim();
    let cover_sequence = ext1(&s1, &s2).unwrap().dim();
    let cocycles = cocycle_ext_dim(&s1, &s2);
    verdict(
        coequalizer_kernel == 1 && cover_sequence == 1 && cocycles == 1,
        format!("a⊗̄b = {coequalizer_kernel}, Ext¹ by cover = {cover_sequence}, by cocycles = {cocycles}"),
    )
}

fn main() -> ExitCode {
    let all = catalogs(&Fixture::ALL);
    let hereditary = catalogs(&[Fixture::A2, Fixture::A3, Fixture::Kronecker]);
    let self_injective = catalogs(&[Fixture::DualNumbers, Fixture::TruncatedCubic, Fixture::Nakayama3]);

    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("torsion triple agreement", Box::new(torsion_triple_agreement)),
        ("radical and coradical laws", Box::new(|| laws_hold(&all, &["radical-law", "trace-idempotence"], 1))),
        ("certificates always succeed", Box::new(|| laws_hold(&all, &["certificates"], 1))),
        ("presentation vs direct stable Hom", Box::new(|| laws_hold(&all, &["presentation-agreement"], 1))),
        ("defect lemma, both directions", Box::new(|| laws_hold(&all, &["defect-lemma"], 1))),
        (
            "tensor identities",
            Box::new(|| {
                let start = Instant::now();
                let v = laws_hold(&all, &["tensor-ext", "tensor-presentation"], 500);
                let elapsed = start.elapsed();
                verdict(v.passed && elapsed < Duration::from_secs(120), format!("{} in {:.2}s", v.detail, elapsed.as_secs_f64()))
            }),
        ),
        ("worked A2 value", Box::new(worked_a2_value)),
        ("torsion radical", Box::new(|| laws_hold(&all, &["torsion-radical"], 1))),
        ("hereditary splitting", Box::new(|| laws_hold(&hereditary, &["hereditary-split"], 1))),
        ("quasi-Frobenius behavior", Box::new(|| laws_hold(&self_injective, &["quasi-frobenius"], 1))),
        // 50 morphisms per catalog, each evaluated at 20 probes for kernel and cokernel
        ("fp kernel/cokernel componentwise", Box::new(|| laws_hold(&all, &["fp-kernel-cokernel"], all.len() * COUNT * 20 * 2))),
        ("torsion kills injectives", Box::new(|| laws_hold(&all, &["torsion-kills-injectives"], 1))),
    ];

    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let status = if v.passed { "PASS" } else { "FAIL" };
        failures += !v.passed as usize;
        println!("{status} criterion {}: {name} ({})", i + 1, v.detail);
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
