//! Acceptance suite. One test per criterion, named `criterion_NN_*`, so the
//! harness prints exactly one pass/fail line for each.
//!
//! Run with `cargo test -p bihom --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use bihom::format::save;
use bihom_core::analysis::{
    decompose_bihom, decompose_semisimple, enveloping_dim, is_semisimple_lie, killing_determinant, simplicity,
    type_candidates, Series, TypeLabel, M_EQUALS_TWO_WARNING,
};
use bihom_core::catalog::{
    block_permutation, make_l1, make_l2, make_l3, make_l3_as_printed, make_sl2, torus,
};
use bihom_core::classify::{bihom_isomorphic3, classify3, verify_isomorphism, Family};
use bihom_core::exactlin::{frac, invert, rat, MatrixQ, Rational};
use bihom_core::twist::{induce_lie, yau_twist, TwistInput};
use bihom_core::{check_all, BiHomAlgebra, StructureTensor};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tempfile::TempDir;

fn q(n: i64, d: i64) -> Rational {
    frac(n, d)
}

fn l1_params() -> [(Rational, Rational); 4] {
    [(rat(2), rat(3)), (rat(-3), q(1, 2)), (q(5, 7), q(-7, 5)), (rat(1), rat(1))]
}

fn l3_params() -> [Rational; 5] {
    [rat(0), rat(1), rat(3), q(-1, 2), q(7, 4)]
}

/// Every catalog instance used by the criteria, with a name for messages.
fn corpus() -> Vec<(String, BiHomAlgebra)> {
    let mut out = Vec::new();
    for (a, b) in l1_params() {
        out.push((format!("L1({a}, {b})"), make_l1(a, b).unwrap()));
    }
    out.push((String::from("L2"), make_l2()));
    for a in l3_params() {
        out.push((format!("L3({a})"), make_l3(a)));
    }
    out
}

/// Nonzero rational with numerator and denominator of absolute value at most 10.
fn random_rational(rng: &mut StdRng) -> Rational {
    let n: i64 = rng.gen_range(1..=10);
    let d: i64 = rng.gen_range(1..=10);
    if rng.gen_bool(0.5) {
        q(-n, d)
    } else {
        q(n, d)
    }
}

fn random_invertible(rng: &mut StdRng) -> MatrixQ {
    loop {
        let m = MatrixQ::from_fn(3, 3, |_, _| rat(rng.gen_range(-3..=3)));
        if invert(&m).is_ok() {
            return m;
        }
    }
}

/// `exp(ad x)` for a nilpotent `ad x` on a 3-dimensional algebra.
fn exp_nilpotent(n: &MatrixQ) -> MatrixQ {
    let n2 = n.matmul(n);
    &(&MatrixQ::identity(3) + n) + &n2.scale(&q(1, 2))
}

fn sl2_sum(k: usize) -> StructureTensor {
    let s = make_sl2();
    let parts: Vec<&StructureTensor> = (0..k).map(|_| &s).collect();
    StructureTensor::direct_sum(&parts)
}

fn twisted_sum(k: usize, perm: &[usize]) -> BiHomAlgebra {
    let n = 3 * k;
    yau_twist(&TwistInput::new(sl2_sum(k), block_permutation(3, perm), MatrixQ::identity(n))).unwrap()
}

#[test]
fn criterion_01_axiom_suite_on_l1() {
    for (a, b) in l1_params() {
        let alg = make_l1(a.clone(), b.clone()).unwrap();
        let start = Instant::now();
        let report = check_all(&alg);
        let elapsed = start.elapsed();
        assert!(report.all_pass(), "L1({a}, {b}): {report:?}");
        assert!(elapsed < Duration::from_millis(50), "L1({a}, {b}) took {elapsed:?}");
    }
}

#[test]
fn criterion_02_twist_oracle_equality() {
    for (a, b) in l1_params() {
        let table = make_l1(a.clone(), b.clone()).unwrap();
        let oracle = yau_twist(&TwistInput::new(make_sl2(), torus(&a), torus(&b))).unwrap();
        let mut compared = 0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(table.tensor().get(i, j, k), oracle.tensor().get(i, j, k));
                    compared += 1;
                }
            }
        }
        assert_eq!(compared, 27);
        assert_eq!(table.tensor().product(0, 1), &[rat(0), rat(2) * &b, rat(0)][..]);
        assert_eq!(table.tensor().product(1, 2), &[&a / &b, rat(0), rat(0)][..]);
    }
}

#[test]
fn criterion_03_roundtrip_on_random_commuting_pairs() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let sl2 = make_sl2();
    let (ad_e, ad_f) = (sl2.ad(1), sl2.ad(2));
    for trial in 0..25 {
        let (s, t) = (random_rational(&mut rng), random_rational(&mut rng));
        let (alpha, beta) = match trial % 3 {
            0 => (torus(&s), torus(&t)),
            1 => (exp_nilpotent(&ad_e.scale(&s)), exp_nilpotent(&ad_e.scale(&t))),
            _ => (exp_nilpotent(&ad_f.scale(&s)), exp_nilpotent(&ad_f.scale(&t))),
        };
        let input = TwistInput::new(sl2.clone(), alpha, beta);
        let twisted = yau_twist(&input).unwrap();
        let induced = induce_lie(&twisted).unwrap();
        assert_eq!(induced, input, "trial {trial}");
        assert_eq!(yau_twist(&induced).unwrap(), twisted, "trial {trial}");
    }
}

#[test]
fn criterion_04_induced_algebras_are_semisimple() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut instances = corpus();
    let base = corpus();
    for k in 0..10 {
        let (name, alg) = &base[k % base.len()];
        instances.push((format!("{name} conjugate {k}"), alg.conjugate(&random_invertible(&mut rng)).unwrap()));
    }
    for (name, alg) in &instances {
        let induced = induce_lie(alg).unwrap();
        assert!(is_semisimple_lie(&induced.lie).unwrap(), "{name}");
        let label = classify3(alg).unwrap();
        let normalized = induced.lie.change_basis(&label.triple.matrix()).unwrap();
        assert_eq!(normalized, make_sl2(), "{name}");
        assert_eq!(killing_determinant(&normalized).unwrap(), rat(-128), "{name}");
    }
}

#[test]
fn criterion_05_simplicity_via_burnside() {
    for (name, alg) in corpus() {
        let t = alg.tensor();
        let mut gens: Vec<MatrixQ> = (0..3).map(|i| t.ad(i)).collect();
        gens.push(alg.alpha().clone());
        gens.push(alg.beta().clone());
        gens.push(MatrixQ::identity(3));
        assert_eq!(enveloping_dim(&gens).unwrap(), 9, "{name}");
        assert!(simplicity(&alg).unwrap().simple, "{name}");
    }
    let pair = BiHomAlgebra::from_lie(sl2_sum(2));
    let s = simplicity(&pair).unwrap();
    assert_eq!((s.enveloping_dim, s.simple), (18, false));
}

#[test]
fn criterion_06_decomposition_and_permutations() {
    let swapped = twisted_sum(2, &[1, 0]);
    assert_eq!(decompose_semisimple(&induce_lie(&swapped).unwrap().lie).unwrap().len(), 2);
    let d = decompose_bihom(&swapped).unwrap();
    assert_eq!(d.sigma_alpha.to_string(), "(1 2)");
    assert!(d.sigma_beta.is_identity());
    assert_eq!(d.m, 2);
    assert_eq!(d.warning(), Some(M_EQUALS_TWO_WARNING));

    let cycled = twisted_sum(3, &[1, 2, 0]);
    let d = decompose_bihom(&cycled).unwrap();
    assert_eq!(d.m, 3);
    assert_eq!(d.sigma_alpha.cycles().len(), 1);
    assert_eq!(d.sigma_alpha.cycles()[0].len(), 3);
    assert!(d.sigma_alpha.is_transitive());
    assert_eq!(d.warning(), None);
}

#[test]
fn criterion_07_type_enumeration() {
    let label = |series, rank, m| TypeLabel { series, rank, m };
    assert_eq!(type_candidates(3), vec![label(Series::A, 1, 1)]);
    assert_eq!(type_candidates(14), vec![label(Series::G2, 0, 1)]);
    let six = type_candidates(6);
    assert!(six.contains(&label(Series::A, 1, 2)));
    assert!(six.iter().all(|t| t.series == Series::A));
}

#[test]
fn criterion_08_classifier_soundness_and_stability() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for (name, alg) in corpus() {
        let label = classify3(&alg).unwrap();
        let expected_family = match name.as_bytes()[1] {
            b'1' => Family::L1,
            b'2' => Family::L2,
            _ => Family::L3,
        };
        assert_eq!(label.family, expected_family, "{name}");
        let target = label.catalog_algebra();
        assert!(alg.conjugate(&label.change_of_basis).unwrap().same_structure(&target), "{name}");
        if alg.same_structure(&target) {
            assert!(label.change_of_basis.is_identity(), "{name}");
        }
        for k in 0..10 {
            let moved = alg.conjugate(&random_invertible(&mut rng)).unwrap();
            let l = classify3(&moved).unwrap();
            assert!(l.same_class(&label), "{name} conjugate {k}: {l} vs {label}");
            assert!(moved.conjugate(&l.change_of_basis).unwrap().same_structure(&target), "{name} conjugate {k}");
        }
    }
    // the catalog parameters come back normalized
    let l = classify3(&make_l1(q(5, 7), q(-7, 5)).unwrap()).unwrap();
    assert_eq!(l.params, vec![q(7, 5), q(-5, 7)]);
    assert_eq!(classify3(&make_l3(rat(3))).unwrap().params, vec![rat(3)]);
}

#[test]
fn criterion_09_isomorphism_criterion() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    for (name, alg) in corpus() {
        let moved = alg.conjugate(&random_invertible(&mut rng)).unwrap();
        for (x, y) in [(&alg, &moved), (&moved, &alg), (&alg, &alg)] {
            let f = bihom_isomorphic3(x, y).unwrap().unwrap_or_else(|| panic!("{name}: expected isomorphic"));
            assert!(verify_isomorphism(x, y, &f), "{name}");
            assert_eq!(f.matmul(x.alpha()), y.alpha().matmul(&f));
            assert_eq!(f.matmul(x.beta()), y.beta().matmul(&f));
        }
    }
    let l1 = make_l1(rat(2), rat(3)).unwrap();
    let l2 = make_l2();
    let l3 = make_l3(rat(3));
    for (x, y) in [(&l1, &l2), (&l2, &l3), (&l1, &l3)] {
        assert_eq!(bihom_isomorphic3(x, y).unwrap(), None);
    }
}

#[test]
fn criterion_10_errata_discipline() {
    let errata = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../ERRATA.md")).unwrap();
    let printed = check_all(&make_l3_as_printed(rat(2)));
    assert!(!printed.all_pass());
    for (axiom, check) in printed.entries() {
        if let Some(w) = check.witness() {
            let line = format!("{axiom}: {w}");
            assert!(errata.contains(&line), "ERRATA.md lacks `{line}`");
        }
    }
    for needle in ["(3a - a^2)/2", "3a - a^2", "(1 - a)(a + 4)/2", "(1 - a)(a + 2)/2"] {
        assert!(errata.contains(needle), "ERRATA.md lacks {needle}");
    }
    for a in l3_params() {
        assert!(check_all(&make_l3(a)).all_pass());
    }
    for (name, alg) in corpus() {
        assert!(check_all(&alg).all_pass(), "{name}");
    }
    assert!(check_all(&BiHomAlgebra::from_lie(make_sl2())).all_pass());
}

fn bihom(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn exit(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn fixture(dir: &Path, name: &str, a: &BiHomAlgebra) -> PathBuf {
    let p = dir.join(name);
    save(a, &p).unwrap();
    p
}

#[test]
fn criterion_11_cli_end_to_end() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();

    assert_eq!(exit(&bihom(&["catalog", "L1", "--a", "2", "--b", "3", "-o", "x.json"], dir)), 0);
    assert_eq!(exit(&bihom(&["check", "x.json"], dir)), 0);

    fixture(dir, "pair.json", &BiHomAlgebra::from_lie(sl2_sum(2)));
    let o = bihom(&["analyze", "pair.json", "--json"], dir);
    assert_eq!(exit(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["decomposition"]["m"], 2);
    assert_eq!(v["decomposition"]["ideals"].as_array().unwrap().len(), 2);
    assert!(v["type_candidates"].as_array().unwrap().contains(&serde_json::json!("(A1, m=2)")));

    assert_eq!(exit(&bihom(&["catalog", "L2", "-o", "l2.json"], dir)), 0);
    let o = bihom(&["classify3", "l2.json"], dir);
    assert_eq!(exit(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().next(), Some("L2"));

    // exit-code contracts
    fixture(dir, "printed.json", &make_l3_as_printed(rat(2)));
    assert_eq!(exit(&bihom(&["check", "printed.json"], dir)), 1);
    assert_eq!(exit(&bihom(&["check", "nope.json"], dir)), 2);
    let broken = std::fs::read_to_string(dir.join("x.json")).unwrap().replacen("\"1/2\"", "\"2/0\"", 1);
    std::fs::write(dir.join("broken.json"), broken).unwrap();
    assert_eq!(exit(&bihom(&["check", "broken.json"], dir)), 2);
    let singular = BiHomAlgebra::new(StructureTensor::zeros(3), MatrixQ::zeros(3, 3), MatrixQ::identity(3)).unwrap();
    fixture(dir, "singular.json", &singular);
    assert_eq!(exit(&bihom(&["induce", "singular.json", "-o", "out.json"], dir)), 1);
    assert_eq!(exit(&bihom(&["induce", "x.json", "-o", "lie.json"], dir)), 0);
    std::fs::write(dir.join("shear.json"), "[[\"1\",\"1\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]").unwrap();
    std::fs::write(dir.join("id.json"), "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]").unwrap();
    fixture(dir, "sl2.json", &BiHomAlgebra::from_lie(make_sl2()));
    assert_eq!(exit(&bihom(&["twist", "sl2.json", "--alpha", "shear.json", "--beta", "id.json"], dir)), 1);
    assert_eq!(exit(&bihom(&["twist", "sl2.json", "--alpha", "id.json", "--beta", "id.json", "-o", "t.json"], dir)), 0);
    assert_eq!(exit(&bihom(&["classify3", "pair.json"], dir)), 1);
    assert_eq!(exit(&bihom(&["iso3", "x.json", "l2.json"], dir)), 1);
    assert_eq!(exit(&bihom(&["iso3", "l2.json", "l2.json"], dir)), 0);

    // byte-stable machine output
    for args in [
        &["check", "x.json", "--json"][..],
        &["analyze", "pair.json", "--json"][..],
        &["classify3", "x.json", "--json"][..],
        &["iso3", "x.json", "x.json", "--json"][..],
    ] {
        let first = bihom(args, dir);
        let second = bihom(args, dir);
        assert!(!first.stdout.is_empty(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
