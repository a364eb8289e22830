use std::collections::BTreeMap;

use mtc_core::cobordism::{genus_word_check, Evaluator};
use mtc_core::genus::{validate_fr, FrData, GenusElement, GenusEngine};
use mtc_core::skein::hom_dim;
use mtc_core::source::load_category;
use mtc_core::verlinde::{genus_dim_bruteforce, genus_dim_formula};
use mtc_core::{CategoryData, Error, C64, DEFAULT_TOL};

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("mtc-core-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn category_file_with_s_omitted() {
    let ising = load_category("ising").unwrap();
    let mut raw = ising.to_raw();
    raw.s = None;
    raw.name = "ising-from-file".into();
    let path = scratch("ising.json");
    std::fs::write(&path, serde_json::to_string(&raw).unwrap()).unwrap();
    let loaded = load_category(path.to_str().unwrap()).unwrap();
    assert_eq!(loaded.name(), "ising-from-file");
    assert!(loaded.validate(DEFAULT_TOL).passed());
    let diff = (loaded.s_matrix() - ising.s_matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert!(diff < 1e-12);
}

#[test]
fn fr_tables_from_file_drive_the_engine() {
    let fib = load_category("fibonacci").unwrap();
    let fr = FrData::builtin(&fib).unwrap();
    let path = scratch("fib-fr.json");
    std::fs::write(&path, fr.to_json()).unwrap();
    let back = FrData::from_json_file(&fib, &path).unwrap();
    assert!(validate_fr(&fib, &back, DEFAULT_TOL).unwrap().passed());
    let engine = GenusEngine::new(&fib, &back).unwrap();
    assert!(engine.verify_handlebody_verlinde(2, DEFAULT_TOL).unwrap().passed());
}

#[test]
fn genus_two_basis_count_matches_hom_dims() {
    for name in ["fibonacci", "ising", "semion", "su2(3)"] {
        let cat = load_category(name).unwrap();
        let fr = FrData::builtin(&cat).unwrap();
        let engine = GenusEngine::new(&cat, &fr).unwrap();
        let r = cat.rank();
        let mut want = 0u64;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    want += hom_dim(&cat, k, &[i, j]).unwrap().pow(2);
                }
            }
        }
        assert_eq!(engine.enumerate_basis(2, 0).unwrap().len() as u64, want, "{name}");
    }
}

#[test]
fn unit_tuple_loops_give_weighted_identities() {
    let fib = load_category("fibonacci").unwrap();
    let fr = FrData::builtin(&fib).unwrap();
    let engine = GenusEngine::new(&fib, &fr).unwrap();
    let basis = engine.enumerate_basis(2, 0).unwrap();
    let unit = basis.iter().find(|x| x.comps.contains_key(&vec![0, 0])).unwrap();
    for out in [engine.gen_s(unit), engine.gen_sbar(unit)] {
        assert_eq!(out.comps.len(), 4);
        for (ks, op) in &out.comps {
            let w = fib.d(ks[0]) * fib.d(ks[1]);
            for (k, block) in op.blocks.iter().enumerate() {
                let n = hom_dim(&fib, k, ks).unwrap() as usize;
                assert_eq!(block.shape(), (n, n));
                for a in 0..n {
                    for b in 0..n {
                        let want = if a == b { w } else { C64::default() };
                        assert!((block[(a, b)] - want).norm() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn multiplicity_is_rejected() {
    let su2 = load_category("su2(2)").unwrap();
    let doubled = CategoryData::product(&su2, &su2);
    assert!(doubled.is_multiplicity_free());
    let mut raw = load_category("fibonacci").unwrap().to_raw();
    raw.n[1][1][1] = 2;
    let bad = CategoryData::from_raw(raw).unwrap();
    assert!(matches!(FrData::new(&bad, Default::default(), Default::default()), Err(Error::NotMultiplicityFree { .. })));
}

#[test]
fn genus_words_agree_with_formula() {
    let fib = load_category("fibonacci").unwrap();
    let tau = fib.label_index("tau").unwrap();
    for g in 0..=3 {
        for ins in [vec![0], vec![tau], vec![tau, tau], vec![tau, 0, tau]] {
            let check = genus_word_check(&fib, g, &ins, DEFAULT_TOL).unwrap();
            assert!(check.residual < 1e-9, "g={g} {ins:?}");
            let formula = genus_dim_formula(&fib, g as u32, &ins, DEFAULT_TOL).unwrap();
            let brute = genus_dim_bruteforce(&fib, g as u32, &ins).unwrap();
            assert!((check.fusion_value - brute as f64).norm() < 1e-9);
            assert!((formula - brute as f64).norm() < 1e-9);
        }
    }
}

#[test]
fn psi_squared_is_global_dimension_times_charge_conjugation() {
    for name in ["fibonacci", "ising", "su2(3)", "cyclic(5,2)"] {
        let cat = load_category(name).unwrap();
        let ev = Evaluator::new(&cat, DEFAULT_TOL);
        let m = ev.eval_str("Psi . Psi").unwrap().matrix;
        let r = cat.rank();
        for i in 0..r {
            for j in 0..r {
                let want = if i == cat.dual(j) { cat.global_dim() } else { C64::default() };
                assert!((m[(i, j)] - want).norm() < 1e-9, "{name}");
            }
        }
    }
}

#[test]
fn empty_element_stays_empty() {
    let semion = load_category("semion").unwrap();
    let fr = FrData::builtin(&semion).unwrap();
    let engine = GenusEngine::new(&semion, &fr).unwrap();
    let zero = GenusElement { g: 2, boundary: vec![], comps: BTreeMap::new() };
    assert!(engine.gen_s(&zero).comps.is_empty());
    assert!(engine.gen_fusion(&zero, &zero).unwrap().comps.is_empty());
}
