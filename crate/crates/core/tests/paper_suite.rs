mod common;

use std::path::PathBuf;

use common::*;
use radgen::paper::{
    build_case, builtin_golden, certify_all, certify_case, certify_cases, read_golden, CaseId,
    CertifyOptions, Recipe,
};
use radgen::{Engine, Error, Field, Ideal, MonomialOrder, Polynomial, Ring};

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden")
}

/// Every term divisible by x1 or x3: membership in (x1, x3) without the engine.
fn in_x1_x3(f: &Polynomial) -> bool {
    f.terms().iter().all(|t| {
        let e = t.monomial.exponents();
        e[0] > 0 || e[2] > 0
    })
}

#[test]
fn case_ids_round_trip() {
    for s in ["example1", "example2", "j6", "in:5", "in:12"] {
        let id: CaseId = s.parse().unwrap();
        assert_eq!(id.to_string(), s);
    }
    assert_eq!(CaseId::Family(7).file_stem(), "in_7");
    for bad in ["in:4", "in:0", "in:x", "example3", ""] {
        assert!(matches!(bad.parse::<CaseId>(), Err(Error::UnknownCase(_))), "{bad}");
    }
    assert_eq!(CaseId::all(6).len(), 5);
}

#[test]
fn build_example1() {
    let c = build_case(CaseId::Example1).unwrap();
    assert_eq!(c.ring.nvars(), 6);
    assert_eq!(
        strings(c.ideal.gens()),
        ["x1*x2 + x3*x4", "x1*x6", "x3*x6", "x5*x6"]
    );
    let comps: Vec<Vec<String>> = c.components.iter().map(|i| strings(i.gens())).collect();
    assert_eq!(
        comps,
        [vec!["x1*x2 + x3*x4", "x6"], vec!["x1", "x3", "x5"]]
    );
    assert_eq!(c.dimension, 4);
    assert!(matches!(c.recipe, Recipe::Partition(_)));
    assert_eq!(c.claimed_lower_bound.value, 3);
    assert!(c.claimed_lower_bound.provenance.contains("not machine-checked"));
}

#[test]
fn build_family_member_five_is_example2() {
    let c5 = build_case(CaseId::Family(5)).unwrap();
    assert_eq!(strings(c5.ideal.gens()), ["x1*x2 + x3*x4", "x1*x5", "x3*x5"]);
    let e2 = build_case(CaseId::Example2).unwrap();
    assert_eq!(c5.ideal, e2.ideal);
    assert_eq!(c5.dimension, 3);
    assert!(matches!(
        build_case("in:4".parse().unwrap_or(CaseId::Family(4))),
        Err(Error::UnknownCase(_))
    ));
}

#[test]
fn build_family_generators() {
    for n in 5..=9 {
        let c = build_case(CaseId::Family(n)).unwrap();
        let mut expected = vec!["x1*x2 + x3*x4".to_string()];
        expected.extend((5..=n).map(|k| format!("x1*x{k}")));
        expected.extend((5..=n).map(|k| format!("x3*x{k}")));
        let mut got = strings(c.ideal.gens());
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(c.dimension, n - 2);
        assert_eq!(c.components.len(), 2);
        assert_eq!(strings(c.components[1].gens()), ["x1", "x3"]);
    }
}

#[test]
fn certify_example1() {
    let out = certify_case(CaseId::Example1, &CertifyOptions::default()).unwrap();
    let cert = &out.certificate;
    assert!(cert.holds(), "{:?}", cert.notes);
    assert_eq!(cert.generators, ["x1*x6", "x3*x6", "x1*x2 + x3*x4 + x5*x6"]);
    assert_eq!(cert.verdicts.golden, Some(true));
    assert_eq!(cert.dimension.computed, Some(4));
    assert_eq!(cert.recipe, "sv_combine");
    assert!(!cert.membership_witnesses.is_empty());
    let eq = out.radical.as_ref().unwrap();
    assert!(eq.certificates().all(|c| c.recheck()));
    assert!(eq.certificates().all(|c| c.replay(&Engine::default()).unwrap()));
}

#[test]
fn certify_example2_and_j6() {
    let opts = CertifyOptions::default();
    let e2 = certify_case(CaseId::Example2, &opts).unwrap().certificate;
    assert!(e2.holds());
    assert_eq!(
        e2.generators,
        ["x1*x2^2 + x2*x3*x4 + x3*x5", "x1*x2*x4 + x3*x4^2 - x1*x5"]
    );
    assert_eq!(e2.dimension.computed, Some(3));

    let j6 = certify_case(CaseId::J6, &opts).unwrap().certificate;
    assert!(j6.holds());
    assert_eq!(j6.verdicts.golden, Some(true));
    assert_eq!(j6.generators.len(), 3);
    assert_eq!(j6.recipe, "prop1_construct");
}

#[test]
fn certify_family_members() {
    let opts = CertifyOptions::default();
    let ids: Vec<CaseId> = (5..=8).map(CaseId::Family).collect();
    for (n, out) in (5..=8).zip(certify_cases(&ids, &opts)) {
        let out = out.unwrap();
        assert!(out.certificate.holds(), "in:{n}: {:?}", out.certificate.notes);
        assert_eq!(out.generators.len(), n - 3);
        assert!(out.generators.iter().all(in_x1_x3));
        assert_eq!(out.certificate.dimension.computed, Some(n - 2));
        assert_eq!(out.certificate.verdicts.decomposition, Some(true));
    }
}

#[test]
fn family_and_examples_agree() {
    let opts = CertifyOptions::default();
    let g5 = certify_case(CaseId::Family(5), &opts).unwrap().generators;
    let e2 = certify_case(CaseId::Example2, &opts).unwrap().generators;
    assert_eq!(g5, e2);
    let g6 = certify_case(CaseId::Family(6), &opts).unwrap().generators;
    let j6 = certify_case(CaseId::J6, &opts).unwrap().generators;
    assert_eq!(g6, j6);
}

#[test]
fn certify_all_keeps_order() {
    let outs = certify_all(6, &CertifyOptions::default());
    let ids: Vec<String> = outs
        .iter()
        .map(|o| o.as_ref().unwrap().certificate.case_id.clone())
        .collect();
    assert_eq!(ids, ["example1", "example2", "j6", "in:5", "in:6"]);
}

#[test]
fn certificates_are_deterministic() {
    let opts = CertifyOptions::default();
    for id in [CaseId::Example1, CaseId::J6, CaseId::Family(7)] {
        let a = certify_case(id, &opts).unwrap().certificate.to_json();
        let b = certify_case(id, &opts).unwrap().certificate.to_json();
        assert_eq!(a, b);
        let parsed: radgen::paper::Certificate = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.to_json(), a);
    }
}

#[test]
fn certificate_json_has_the_documented_keys() {
    let json = certify_case(CaseId::Example2, &CertifyOptions::default())
        .unwrap()
        .certificate
        .to_json();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["case_id", "field", "order", "generators", "verdicts", "membership_witnesses", "counters"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for key in ["radical_equality", "decomposition", "dimension"] {
        assert!(v["verdicts"].get(key).is_some(), "{key}");
    }
}

#[test]
fn prime_field_matches_rationals() {
    let q = CertifyOptions::default();
    let fp = CertifyOptions {
        field: Field::Prime(32003),
        ..CertifyOptions::default()
    };
    for id in CaseId::all(8) {
        let a = certify_case(id, &q).unwrap();
        let b = certify_case(id, &fp).unwrap();
        assert_eq!(a.certificate.verdicts, b.certificate.verdicts, "{id}");
        assert_eq!(b.certificate.field, "Fp:32003");
        let reduced: Vec<Polynomial> = a
            .generators
            .iter()
            .map(|g| g.map_field(&b.case.ring).unwrap())
            .collect();
        assert_eq!(reduced, b.generators, "{id}");
        for (x, y) in a.generators.iter().zip(&b.generators) {
            let sx: Vec<_> = x.terms().iter().map(|t| t.monomial.clone()).collect();
            let sy: Vec<_> = y.terms().iter().map(|t| t.monomial.clone()).collect();
            assert_eq!(sx, sy, "{id}");
        }
    }
}

#[test]
fn lex_order_also_certifies() {
    let opts = CertifyOptions {
        order: MonomialOrder::Lex,
        ..CertifyOptions::default()
    };
    for id in [CaseId::Example1, CaseId::Example2, CaseId::J6] {
        let cert = certify_case(id, &opts).unwrap().certificate;
        assert!(cert.holds(), "{id}: {:?}", cert.notes);
        assert_eq!(cert.order, "lex");
    }
}

#[test]
fn decomposition_examples() {
    let r = ring(6);
    let e = Engine::default();
    let i = ideal(&r, &["x1*x2 + x3*x4", "x1*x6", "x3*x6", "x5*x6"]);
    let comps = [
        ideal(&r, &["x1*x2 + x3*x4", "x6"]),
        ideal(&r, &["x1", "x3", "x5"]),
    ];
    assert!(e.verify_decomposition(&i, &comps).unwrap().holds);
    assert!(e.verify_decomposition(&i, &[i.clone()]).unwrap().holds);
    let rep = e.verify_decomposition(&i, &comps[1..]).unwrap();
    assert!(!rep.holds);
    assert!(rep.missing_from_ideal.contains(&p(&r, "x1")));
    assert!(rep.missing_from_intersection.is_empty());
    assert!(matches!(e.verify_decomposition(&i, &[]), Err(Error::MalformedInput(_))));
    let other = ideal(&ring(5), &["x1"]);
    assert!(matches!(
        e.verify_decomposition(&i, &[other]),
        Err(Error::ContextMismatch)
    ));
}

#[test]
fn golden_files_match_builtins() {
    let dir = golden_dir();
    for id in CaseId::all(8) {
        let file = read_golden(&dir, id).unwrap();
        let builtin = builtin_golden(id).map(|g| g.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(file, builtin, "{id}");
    }
}

#[test]
fn golden_dir_overrides_and_mismatch_is_a_false_verdict() {
    let dir = std::env::temp_dir().join(format!("radgen-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("example2.txt"), "# wrong on purpose\nx1\nx3\n").unwrap();
    let opts = CertifyOptions {
        golden_dir: Some(dir.clone()),
        ..CertifyOptions::default()
    };
    let cert = certify_case(CaseId::Example2, &opts).unwrap().certificate;
    assert_eq!(cert.verdicts.golden, Some(false));
    assert!(cert.verdicts.radical_equality);
    assert!(!cert.holds());
    assert!(cert.notes.iter().any(|n| n.contains("golden mismatch")));
    // No file for j6 in this directory: the built-in values apply.
    let j6 = certify_case(CaseId::J6, &opts).unwrap().certificate;
    assert_eq!(j6.verdicts.golden, Some(true));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn family_without_golden_values() {
    let cert = certify_case(CaseId::Family(7), &CertifyOptions::default())
        .unwrap()
        .certificate;
    assert_eq!(cert.verdicts.golden, None);
    assert!(cert.holds());
    assert_eq!(cert.generators.len(), 4);
    assert_eq!(cert.dimension.computed, Some(5));
}
