//! JSON encoding of values and evaluation records, schema version "1".

use serde_json::{json, Map, Value as Json};

use crate::cuts::RootCutClass;
use crate::eval::Error;
use crate::ordinal::{BaseExpansion, Ordinal, OrdinalClass};
use crate::print::print_canonical;
use crate::surinteger::{CyclicForm, SurInteger};
use crate::surrational::{reduce, SurRational};
use crate::value::{Classification, Value};

pub const SCHEMA: &str = "1";

pub fn ordinal_tree(a: &Ordinal) -> Json {
    let terms: Vec<Json> = a
        .terms()
        .iter()
        .map(|t| json!({"exp": ordinal_tree(&t.exponent), "coeff": t.coefficient.to_string()}))
        .collect();
    json!({ "terms": terms })
}

pub fn surinteger_tree(a: &SurInteger) -> Json {
    let terms: Vec<Json> = a
        .terms()
        .iter()
        .map(|t| json!({"exp": ordinal_tree(&t.exponent), "coeff": t.coefficient.to_string()}))
        .collect();
    json!({ "terms": terms })
}

pub fn surrational_tree(p: &SurRational) -> Json {
    let p = reduce(p);
    json!({
        "num": surinteger_tree(p.num()),
        "den": surinteger_tree(p.den()),
        "reduced": p.is_reduced(),
    })
}

fn expansion_tree(e: &BaseExpansion) -> Json {
    let digits: Vec<Json> = e
        .digits
        .iter()
        .map(|d| json!({"exp": ordinal_tree(&d.exponent), "digit": ordinal_tree(&d.coefficient)}))
        .collect();
    json!({ "base": ordinal_tree(&e.base), "digits": digits })
}

fn classification_tree(c: &Classification) -> Json {
    match c {
        Classification::Ordinal(k) => json!({
            "class": match k {
                OrdinalClass::Zero => "zero",
                OrdinalClass::Successor => "successor",
                OrdinalClass::Limit => "limit",
            }
        }),
        Classification::RootCut(RootCutClass::Surrational(p)) => {
            json!({"class": "surrational", "witness": surrational_tree(p)})
        }
        Classification::RootCut(RootCutClass::Irrational) => json!({"class": "irrational"}),
        Classification::Cyclic(CyclicForm::Cyclic { negative, count }) => {
            json!({"class": "cyclic", "negative": negative, "count": count.to_string()})
        }
        Classification::Cyclic(CyclicForm::NotCyclic) => json!({"class": "not-cyclic"}),
    }
}

/// The payload of a value, without its type tag.
pub fn value_tree(v: &Value) -> Json {
    match v {
        Value::Ordinal(o) => ordinal_tree(o),
        Value::SurInteger(s) => surinteger_tree(s),
        Value::SurRational(q) => surrational_tree(q),
        Value::Gaussian(g) => json!({"re": surrational_tree(&g.re), "im": surrational_tree(&g.im)}),
        Value::Boolean(b) => json!(b),
        Value::Classification(c) => classification_tree(c),
        Value::Expansion(e) => expansion_tree(e),
    }
}

pub fn value_to_json(v: &Value) -> Json {
    json!({
        "schema": SCHEMA,
        "type": v.type_name(),
        "value": value_tree(v),
        "canonical": print_canonical(v),
    })
}

pub fn error_tree(src: &str, e: &Error) -> Json {
    let (line, column) = e.position(src);
    let mut m = Map::new();
    m.insert("code".into(), json!(e.code()));
    m.insert("line".into(), json!(line));
    m.insert("column".into(), json!(column));
    match e {
        Error::Parse(d) => {
            m.insert("message".into(), json!(d.message()));
            m.insert(
                "expected".into(),
                json!(d.expected.iter().collect::<Vec<_>>()),
            );
        }
        Error::Eval(ev) => {
            m.insert("message".into(), json!(ev.message()));
            m.insert("op".into(), json!(ev.op));
        }
    }
    Json::Object(m)
}

/// One batch record: `{schema, input, type, value, canonical}` or `{schema, input, error}`.
pub fn record(input: &str, result: &Result<Value, Error>) -> Json {
    match result {
        Ok(v) => json!({
            "schema": SCHEMA,
            "input": input,
            "type": v.type_name(),
            "value": value_tree(v),
            "canonical": print_canonical(v),
        }),
        Err(e) => json!({
            "schema": SCHEMA,
            "input": input,
            "error": error_tree(input, e),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::Evaluator;

    #[test]
    fn ordinal_tree_shape() {
        let v = Evaluator::new().eval_str("w^2*3 + 7").unwrap();
        let j = value_to_json(&v);
        assert_eq!(j["schema"], "1");
        assert_eq!(j["value"]["terms"][0]["coeff"], "3");
        assert_eq!(j["value"]["terms"][0]["exp"]["terms"][0]["coeff"], "2");
        assert_eq!(j["value"]["terms"][1]["exp"]["terms"], json!([]));
    }

    #[test]
    fn error_records() {
        let ev = Evaluator::new();
        let r = record("1 / 0", &ev.eval_str("1 / 0"));
        assert_eq!(r["error"]["code"], "DivisionByZero");
        let r = record("1 +", &ev.eval_str("1 +"));
        assert_eq!(r["error"]["code"], "ParseError");
        assert_eq!(r["error"]["column"], 4);
    }
}
