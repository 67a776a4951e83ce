use std::fmt::Write;

use super::ast::{CarrierExpr, SpecDraft, Value};

fn carrier(expr: &CarrierExpr, out: &mut String) {
    match expr {
        CarrierExpr::Call { name, args } => {
            let args: Vec<String> = args.iter().map(|a| a.node.to_string()).collect();
            let _ = write!(out, "{}({})", name.node, args.join(", "));
        }
        CarrierExpr::Product(a, b) => {
            carrier(a, out);
            out.push_str(" x ");
            carrier(b, out);
        }
    }
}

fn value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Ident(s) => s.clone(),
        Value::Matrix(rows) => {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("[{}]", rows.join(", "))
        }
    }
}

/// Canonical source text: carrier first, then operations, then checks.
pub fn pretty(draft: &SpecDraft) -> String {
    let mut out = String::from("carrier ");
    carrier(&draft.carrier, &mut out);
    out.push_str(";\n");
    for op in &draft.ops {
        let args: Vec<String> = op.args.iter().map(|a| format!("{}={}", a.name.node, value(&a.value.node))).collect();
        let _ = writeln!(out, "op {} = {}({});", op.name.node, op.ctor.node, args.join(", "));
    }
    for c in &draft.checks {
        let mut line = format!("check {}", c.check.node);
        for o in &c.ops {
            line.push(' ');
            line.push_str(&o.node);
        }
        let _ = writeln!(out, "{line};");
    }
    out
}
