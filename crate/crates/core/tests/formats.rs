use radgen::constructions::SvVariant;
use radgen::formats::{parse_ideal_file, parse_matrix_json, parse_partition_file, parse_ring_spec};
use radgen::{Engine, Error, Field, MonomialOrder, RingContext};

const GREVLEX: MonomialOrder = MonomialOrder::Grevlex;

#[test]
fn ring_specs() {
    let r = parse_ring_spec("Q x y z", Field::Rational, None, GREVLEX).unwrap();
    assert_eq!(r.vars(), ["x", "y", "z"]);
    assert_eq!(r.field(), Field::Rational);

    let r = parse_ring_spec("Fp:7 a b", Field::Rational, None, GREVLEX).unwrap();
    assert_eq!(r.field(), Field::Prime(7));

    let r = parse_ring_spec("a b", Field::Prime(5), None, GREVLEX).unwrap();
    assert_eq!(r.field(), Field::Prime(5));

    let r = parse_ring_spec("Q a b", Field::Rational, Some(Field::Prime(3)), GREVLEX).unwrap();
    assert_eq!(r.field(), Field::Prime(3));

    assert!(matches!(
        parse_ring_spec("Fp:8 a", Field::Rational, None, GREVLEX),
        Err(Error::InvalidField(_))
    ));
    assert!(matches!(
        parse_ring_spec("Q", Field::Rational, None, GREVLEX),
        Err(Error::InvalidRing(_))
    ));
}

#[test]
fn ideal_file() {
    let text = "# first case\nring Q x1 x2 x3 x4 x5 x6\n\nx1*x2 + x3*x4\nx1*x6  # trailing\nx3*x6\nx5*x6\n";
    let i = parse_ideal_file(text, None, GREVLEX).unwrap();
    assert_eq!(i.gens().len(), 4);
    assert_eq!(i.gens()[0].to_string(), "x1*x2 + x3*x4");
    assert_eq!(i.to_file_string().lines().next().unwrap(), "ring Q x1 x2 x3 x4 x5 x6");
    let back = parse_ideal_file(&i.to_file_string(), None, GREVLEX).unwrap();
    assert_eq!(back, i);
}

#[test]
fn ideal_file_errors_carry_line_numbers() {
    match parse_ideal_file("ring Q x y\nx +\n", None, GREVLEX) {
        Err(Error::Format { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
    match parse_ideal_file("x + y\n", None, GREVLEX) {
        Err(Error::Format { line, .. }) => assert_eq!(line, 1),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_ideal_file("", None, GREVLEX),
        Err(Error::Format { .. })
    ));
}

#[test]
fn partition_file() {
    let text = "\
ring Q x1 x2 x3 x4 x5 x6
variant: lemma2
subset: x1*x6
subset:
x3*x6
subset:
x1*x2 + x3*x4
exp: 2
x5*x6
";
    let part = parse_partition_file(text, None, GREVLEX, SvVariant::Lemma1).unwrap();
    assert_eq!(part.variant(), SvVariant::Lemma2);
    let sizes: Vec<usize> = part.subsets().iter().map(Vec::len).collect();
    assert_eq!(sizes, [1, 1, 2]);
    assert_eq!(part.subsets()[2][0].exponent, 2);
    assert_eq!(part.subsets()[2][1].exponent, 1);
    let out = Engine::default().sv_combine(&part, false).unwrap();
    assert!(out.certified());
    assert_eq!(out.generators[2].to_string(), "x1^2*x2^2 + 2*x1*x2*x3*x4 + x3^2*x4^2 + x5*x6");
}

#[test]
fn partition_file_errors() {
    let bad = [
        ("ring Q x\nx\n", 2),
        ("ring Q x\nsubset: x\nexp: zero\n", 3),
        ("ring Q x\nexp: 2\n", 2),
        ("ring Q x\nvariant: lemma3\nsubset: x\n", 2),
    ];
    for (text, want) in bad {
        match parse_partition_file(text, None, GREVLEX, SvVariant::Lemma2) {
            Err(Error::Format { line, .. }) => assert_eq!(line, want, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(matches!(
        parse_partition_file("ring Q x y\nsubset: x\ny\n", None, GREVLEX, SvVariant::Lemma2),
        Err(Error::MalformedPartition(_))
    ));
}

#[test]
fn matrix_json() {
    let text = r#"{"ring": "Q x1 x2 x3 x4 x5", "p": ["x5"],
        "rows": [{"c": "x3", "i": 1}, {"c": "-x1", "i": 1}],
        "alpha0": ["x2", "x4"]}"#;
    let input = parse_matrix_json(text, None, None, GREVLEX).unwrap();
    assert_eq!(input.n(), 2);
    let c = Engine::default().theorem1_construct(&input).unwrap();
    assert!(c.certified());
    assert_eq!(c.outputs[0].to_string(), "x1*x2^2 + x2*x3*x4 + x3*x5");

    let ring = RingContext::standard(Field::Rational, 5, GREVLEX);
    let no_ring = r#"{"p": ["x5"], "rows": [{"c": "x3", "i": 1}, {"c": "x1", "i": 1}], "alpha0": ["1", "1"]}"#;
    assert!(parse_matrix_json(no_ring, Some(&ring), None, GREVLEX).is_ok());
    assert!(matches!(
        parse_matrix_json(no_ring, None, None, GREVLEX),
        Err(Error::MalformedInput(_))
    ));
    assert!(matches!(
        parse_matrix_json("{", Some(&ring), None, GREVLEX),
        Err(Error::Json(_))
    ));
    let bad_column = r#"{"p": ["x5"], "rows": [{"c": "x3", "i": 2}, {"c": "x1", "i": 1}], "alpha0": ["1", "1"]}"#;
    assert!(matches!(
        parse_matrix_json(bad_column, Some(&ring), None, GREVLEX),
        Err(Error::MalformedInput(_))
    ));
}
