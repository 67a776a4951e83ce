use super::*;
use crate::carrier::DEFAULT_GUARD;
use crate::engine::{check_dimonoid, check_interchange, check_rack_quandle, Side};

fn src(text: &str) -> SpecSource {
    SpecSource::new(text, "inline")
}

fn errors(text: &str) -> Vec<Diagnostic> {
    parse_spec(&src(text)).unwrap_err().into_iter().filter(Diagnostic::is_error).collect()
}

fn compile(text: &str) -> SystemSpec {
    load_spec(&src(text), DEFAULT_GUARD).unwrap()
}

/// The character run a diagnostic's span covers.
fn span_text(text: &str, d: &Diagnostic) -> String {
    let line = text.split('\n').nth(d.line - 1).unwrap();
    line.chars().skip(d.column - 1).take(d.span.len).collect()
}

#[test]
fn minimal_document() {
    let spec = compile("carrier gl(2,2); op g = gl_group_op(M=[[0,1],[1,0]]);");
    assert_eq!(spec.ops.len(), 1);
    assert_eq!(spec.carrier.len(), 6);
    assert!(spec.checks.is_empty());
    assert_eq!(spec.declared_class, SystemClass::Unclassified);
}

#[test]
fn singular_constant() {
    let text = "carrier gl(2,2); op g = gl_group_op(M=[[1,1],[1,1]]);";
    let errs = errors(text);
    assert_eq!(errs.len(), 1);
    assert_eq!(errs[0].kind, DiagnosticKind::InvalidValue);
    assert!(errs[0].message.contains("singular"));
    assert_eq!(span_text(text, &errs[0]), "[");
}

#[test]
fn quandle_check_declared() {
    let spec = compile("carrier cyclic(5); op q = core_quandle(); check quandle q;");
    assert_eq!(spec.checks.len(), 1);
    assert_eq!(spec.checks[0].kind, CheckKind::Quandle(Side::Right));
    assert_eq!(spec.declared_class, SystemClass::QuandleSystem);
    assert!(check_rack_quandle(spec.op("q").unwrap(), Side::Right, true).passed());
}

#[test]
fn interchange_through_dsl() {
    let spec = compile(
        "carrier matrices(2,2);\n\
         op a = matrix_op(s=1, t=1, M1=[[1,1],[0,1]], M2=[[0,1],[1,1]]);\n\
         op b = matrix_op(s=1, t=0, M1=[[1,0],[1,1]]);\n\
         check interchange a b;\n",
    );
    assert_eq!(spec.checks[0].label, "interchange a b");
    assert_eq!(spec.checks[0].ops, vec![0, 1]);
    assert!(check_interchange(&spec.ops[0].table, &spec.ops[1].table).unwrap().passed());
    assert_eq!(spec.declared_class, SystemClass::SemigroupSystem);
}

#[test]
fn dimonoid_through_dsl() {
    let spec = compile(
        "carrier cyclic(4) x cyclic(4);\n\
         op l = pair_dimonoid(part=dashv);\n\
         op r = pair_dimonoid(part=vdash);\n\
         check dimonoid l r;\n",
    );
    assert_eq!(spec.carrier.len(), 16);
    assert!(check_dimonoid(&spec.ops[0].table, &spec.ops[1].table).unwrap().passed());
    assert_eq!(spec.declared_class, SystemClass::Dimonoid);

    let spec = compile(
        "carrier vector(2,2) x gl(2,2);\n\
         op l = action_dimonoid(part=dashv);\n\
         op r = action_dimonoid(part=vdash);\n\
         check dimonoid l r;\n",
    );
    assert_eq!(spec.carrier.len(), 24);
    assert!(check_dimonoid(&spec.ops[0].table, &spec.ops[1].table).unwrap().passed());
}

#[test]
fn guard_arithmetic() {
    let ok = load_spec(&src("carrier gl(3,3);"), DEFAULT_GUARD);
    assert_eq!(ok.unwrap().carrier.len(), 11232);
    let err = load_spec(&src("carrier gl(3,5); op g = group_op();"), DEFAULT_GUARD).unwrap_err();
    match err {
        SpecError::Compile(CompileError { line: 1, column: 9, source }) => {
            assert!(matches!(source, crate::constructions::ConstructionError::Algebra(AlgebraError::TooLarge { .. })))
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(load_spec(&src("carrier cyclic(7);"), 5).is_err());
}

#[test]
fn not_closed_propagates() {
    let err = load_spec(&src("carrier gl(2,2); op z = matrix_op(s=1, t=1);"), DEFAULT_GUARD).unwrap_err();
    let SpecError::Compile(e) = err else { panic!() };
    assert!(matches!(
        e.source,
        crate::constructions::ConstructionError::Engine(crate::engine::EngineError::NotClosed { .. })
    ));
    assert_eq!((e.line, e.column), (1, 21));
}

#[test]
fn every_constructor_compiles() {
    let cases = [
        "carrier symmetric(3); op a = conj_quandle(m=2); op b = core_quandle(); op c = group_op(); \
         op d = alexander_quandle(phi=inner, g=1); op e = alexander_quandle(phi=power, k=1); \
         op f = opposite(of=a); op h = op_product(i=a, j=b); op t = trivial_quandle(); \
         op u = brace_trivial(part=circ); op v = brace_opposite(part=circ); op w = brace_opposite(part=dot); \
         check multiquandle a b; check nvalued_assoc c u v w; check skew_brace w v; check quandle_right d; \
         check rack_left f; check idempotent h; check distrib_left t; check divisibility_left e; check group c; \
         check assoc u; check distrib_right b; check divisibility_right a; check quandle_left t; check rack_right b;",
        "carrier vector(2,2) x gl(2,2); op p = vxg_phi_op(phi=inner, g=[[0,1],[1,0]]); op q = vxg_conj_op(n=-1); \
         op r = vxg_phi_op(phi=table, image=[[0,1,2,3,4,5]]); check idempotent p; check rack q; check assoc r;",
        "carrier cyclic(16); op plus = z_parity_brace(part=plus); op circ = z_parity_brace(part=circ); \
         check skew_brace plus circ;",
        "carrier cyclic(5); op a = alexander_quandle(phi=power, k=2); op b = alexander_quandle(phi=power, k=-1); check quandle a; check rack b;",
        "carrier symmetric(3) x symmetric(3); op l = action_dimonoid(part=dashv, action=regular); \
         op r = action_dimonoid(part=vdash, action=regular, variant=as_printed); check dimonoid l r;",
        "carrier cyclic(3) x cyclic(2); op l = action_dimonoid(part=dashv, action=trivial); \
         op r = action_dimonoid(part=vdash, action=trivial); check dimonoid l r;",
        "carrier vector(2,3) x trivial_gl(2,3); op p = vxg_phi_op(); check idempotent p;",
        "carrier matrices(2,2) x matrices(2,2); op l = pair_dimonoid(part=dashv); op r = pair_dimonoid(part=vdash); \
         check dimonoid l r;",
    ];
    for text in cases {
        let draft = parse_spec(&src(text)).unwrap_or_else(|d| panic!("{text}: {d:?}"));
        assert!(draft.warnings.is_empty(), "{text}: {:?}", draft.warnings);
        compile_spec(&draft, DEFAULT_GUARD).unwrap_or_else(|e| panic!("{text}: {e}"));
    }
}

#[test]
fn class_inference() {
    let cases = [
        ("check group g;", SystemClass::GroupSystem),
        ("check rack_left g;", SystemClass::RackSystem),
        ("check skew_brace g g; check dimonoid g g;", SystemClass::SkewBrace),
        ("check idempotent g;", SystemClass::Unclassified),
        ("check nvalued_assoc g;", SystemClass::SemigroupSystem),
    ];
    for (checks, class) in cases {
        let spec = compile(&format!("carrier cyclic(4); op g = group_op(); {checks}"));
        assert_eq!(spec.declared_class, class, "{checks}");
    }
}

#[test]
fn diagnostics_point_into_tokens() {
    let cases: &[(&str, DiagnosticKind, &str)] = &[
        ("carrier gl(2,2);\nop g = gl_group_op(M=[[0,1],[1,0]]) \ncheck group g;", DiagnosticKind::Syntax, "check"),
        ("carrier gl(2,2);\nop g = foo();", DiagnosticKind::UnknownIdentifier, "foo"),
        ("carrier gl(2,2);\nop g = group_op();\ncheck group h;", DiagnosticKind::UnknownIdentifier, "h"),
        ("carrier gl(2,2);\nop g = gl_group_op(M=[[1,0,0],[0,1,0],[0,0,1]]);", DiagnosticKind::TypeMismatch, "["),
        ("carrier gl(2,2);\nop g = gl_group_op(M=3);", DiagnosticKind::TypeMismatch, "3"),
        ("carrier gl(2,4);", DiagnosticKind::InvalidValue, "4"),
        ("carrier torus(2);", DiagnosticKind::UnknownIdentifier, "torus"),
        ("carrier cyclic(5);\nop q = core_quandle();\ncheck interchange q;", DiagnosticKind::Arity, "interchange"),
        ("carrier cyclic(5);\nop q = core_quandle(x=1);", DiagnosticKind::UnknownIdentifier, "x"),
        ("carrier cyclic(5);\nop q = core_quandle();\nop q = group_op();", DiagnosticKind::Duplicate, "q"),
        (
            "carrier cyclic(5);\nop q = core_quandle();\ncheck frobnicate q;",
            DiagnosticKind::UnknownIdentifier,
            "frobnicate",
        ),
        ("carrier matrices(2,2);\nop q = core_quandle();", DiagnosticKind::TypeMismatch, "core_quandle"),
        ("carrier cyclic(5);\nop q = opposite(of=r);", DiagnosticKind::UnknownIdentifier, "r"),
        ("carrier cyclic(5);\nop q = brace_trivial();", DiagnosticKind::Arity, "brace_trivial"),
        ("carrier cyclic(5);\nop q = brace_trivial(part=left);", DiagnosticKind::InvalidValue, "left"),
        ("carrier cyclic(5);\nop q = alexander_quandle(phi=inner);", DiagnosticKind::Arity, "inner"),
        ("carrier cyclic(5);\ncarrier cyclic(6);", DiagnosticKind::Duplicate, "carrier"),
        ("carrier cyclic(5) x;", DiagnosticKind::Syntax, ";"),
        ("carrier cyclic(99999999999999999999);", DiagnosticKind::Syntax, "99999999999999999999"),
        ("carrier vector(3,2) x gl(2,2);", DiagnosticKind::TypeMismatch, "gl"),
        ("carrier cyclic(5);\nop q = z_parity_brace(part=plus);", DiagnosticKind::TypeMismatch, "z_parity_brace"),
        ("carrier symmetric(6);", DiagnosticKind::InvalidValue, "6"),
        ("carrier cyclic(5);\nop q = core_quandle() ;\nwhat;", DiagnosticKind::Syntax, "what"),
        ("carrier cyclic(5);\nop q = core_quandle();\ncheck quandle q;\r\nop r = @;", DiagnosticKind::Syntax, "@"),
    ];
    for (text, kind, token) in cases {
        let errs = errors(text);
        let hit = errs.iter().find(|d| d.kind == *kind).unwrap_or_else(|| panic!("{text}: {errs:?}"));
        assert_eq!(span_text(text, hit).trim_end_matches('\r'), *token, "{text}: {hit}");
    }
}

#[test]
fn recovery_reports_several_errors() {
    let text = "carrier cyclic(5);\nop a = ;\nop b = core_quandle();\nop c = nope();\ncheck quandle b;";
    let errs = errors(text);
    assert_eq!(errs.len(), 2);
    assert_eq!((errs[0].line, errs[1].line), (2, 4));
}

#[test]
fn missing_carrier() {
    let errs = errors("# nothing here\n");
    assert_eq!(errs.len(), 1);
    assert!(errs[0].message.contains("no carrier"));
    let errs = errors("op a = group_op(); carrier cyclic(3);");
    assert!(errs.iter().any(|d| d.message.contains("must follow")));
}

#[test]
fn warnings_do_not_block() {
    let draft =
        parse_spec(&src("carrier cyclic(5); op a = group_op(); op b = core_quandle(); check group a;")).unwrap();
    assert_eq!(draft.warnings.len(), 1);
    assert_eq!(draft.warnings[0].severity, Severity::Warning);
    assert!(draft.warnings[0].message.contains("`b`"));
}

#[test]
fn crlf_and_comments() {
    let a = compile("carrier cyclic(5);\r\n# comment\r\nop q = core_quandle(); # trailing\r\ncheck quandle q;\r\n");
    let b = compile("carrier cyclic(5); op q = core_quandle(); check quandle q;");
    assert!(a.same_system(&b));
}

#[test]
fn round_trip() {
    let docs = [
        "carrier gl(2,2); op g = gl_group_op(M=[[0,1],[1,0]]); check group g;",
        "carrier matrices(2,3);\nop a = matrix_op(s=2, t=-1, M1=[[1,2],[0,1]], M2=[[2,2],[1,0]]);\nop b = matrix_op();\ncheck interchange a b; check nvalued_assoc a b a;",
        "carrier vector(2,2) x gl(2,2); op p = vxg_phi_op(phi=inner, g=[[1,1],[0,1]]); op q = opposite(of=p);\ncheck rack_right q; check divisibility_right p;",
        "carrier cyclic(3) x cyclic(3) x cyclic(2); op g = group_op(); check group g;",
        "carrier cyclic(8); op plus = z_parity_brace(part=plus); op c = z_parity_brace(part=circ); check skew_brace plus c;",
    ];
    for text in docs {
        let first = parse_spec(&src(text)).unwrap();
        let printed = pretty(&first);
        let second = parse_spec(&src(&printed)).unwrap();
        assert_eq!(first, second, "{printed}");
        assert_eq!(pretty(&second), printed);
        let (a, b) = (compile_spec(&first, DEFAULT_GUARD).unwrap(), compile_spec(&second, DEFAULT_GUARD).unwrap());
        assert!(a.same_system(&b), "{printed}");
    }
}

#[test]
fn compilation_is_deterministic() {
    let text = "carrier symmetric(4); op a = conj_quandle(m=1); op b = core_quandle(); check multiquandle a b;";
    let (x, y) = (compile(text), compile(text));
    assert!(x.same_system(&y));
    assert_eq!(x.ops[0].table.raw(), y.ops[0].table.raw());
    assert_eq!(src(text).hash(), src(text).hash());
    assert_eq!(src(text).hash().len(), 64);
}

#[test]
fn carrier_expressions() {
    assert_eq!(build_carrier_expr("gl(2,2)", DEFAULT_GUARD).unwrap().len(), 6);
    assert_eq!(build_carrier_expr("gl(2,3)", DEFAULT_GUARD).unwrap().len(), 48);
    assert_eq!(build_carrier_expr("cyclic(7)", DEFAULT_GUARD).unwrap().len(), 7);
    assert_eq!(build_carrier_expr("vector(2,2) x gl(2,2)", DEFAULT_GUARD).unwrap().len(), 24);
    assert!(matches!(
        build_carrier_expr("gl(3,5)", DEFAULT_GUARD),
        Err(CarrierExprError::Build(AlgebraError::TooLarge { .. }))
    ));
    assert!(matches!(build_carrier_expr("gl(2,2) junk", DEFAULT_GUARD), Err(CarrierExprError::Parse(_))));
    assert!(matches!(build_carrier_expr("blob(2)", DEFAULT_GUARD), Err(CarrierExprError::Parse(_))));
}
