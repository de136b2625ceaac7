//! On-disk instance files.
//!
//! An instance is a JSON document holding a polynomial family and an
//! optional variety polynomial, all with exact rational coefficients:
//!
//! ```json
//! {
//!   "nvars": 1,
//!   "family": [ { "terms": [ { "exps": [1], "coef": "1/1" } ] } ],
//!   "variety": { "terms": [ { "exps": [2], "coef": "1/1" } ] }
//! }
//! ```
//!
//! Coefficients are `"num/den"` strings (a bare integer is also accepted)
//! so nothing is lost on the wire; they are reduced on parse, so
//! `"2/4"` loads as one half. Every exponent list must have exactly
//! `nvars` entries, and zero polynomials are rejected.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use signbounds::{Int, Rat, SparsePolynomial};

/// Top-level document: family plus optional variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub nvars: usize,
    pub family: Vec<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variety: Option<PolyDoc>,
}

/// One polynomial as a list of terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub terms: Vec<TermDoc>,
}

/// One term: exponent vector and exact rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exps: Vec<u32>,
    pub coef: String,
}

/// Parses `"num/den"` or a bare integer, rejecting zero denominators.
fn parse_coef(text: &str) -> Result<Rat, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num = Int::from_str(num).map_err(|_| format!("bad coefficient numerator {num:?}"))?;
    let den = Int::from_str(den).map_err(|_| format!("bad coefficient denominator {den:?}"))?;
    if den == Int::from(0) {
        return Err(format!("zero denominator in coefficient {text:?}"));
    }
    Ok(Rat::new(num, den))
}

fn poly_from_doc(doc: &PolyDoc, nvars: usize, what: &str) -> Result<SparsePolynomial, String> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (i, t) in doc.terms.iter().enumerate() {
        if t.exps.len() != nvars {
            return Err(format!(
                "{what}, term {i}: expected {nvars} exponents, got {}",
                t.exps.len()
            ));
        }
        let coef = parse_coef(&t.coef).map_err(|e| format!("{what}, term {i}: {e}"))?;
        terms.push((t.exps.clone(), coef));
    }
    let p = SparsePolynomial::from_terms(nvars, terms).map_err(|e| format!("{what}: {e}"))?;
    if p.is_zero() {
        return Err(format!("{what} is the zero polynomial"));
    }
    Ok(p)
}

/// Parses an instance document from JSON text. Schema errors carry the
/// line and column reported by the JSON parser.
pub fn parse_instance(
    text: &str,
) -> Result<(Vec<SparsePolynomial>, Option<SparsePolynomial>), String> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.nvars == 0 {
        return Err("nvars must be >= 1".into());
    }
    if doc.family.is_empty() {
        return Err("family must be nonempty".into());
    }
    let mut family = Vec::with_capacity(doc.family.len());
    for (i, p) in doc.family.iter().enumerate() {
        family.push(poly_from_doc(p, doc.nvars, &format!("family[{i}]"))?);
    }
    let variety = match &doc.variety {
        Some(q) => Some(poly_from_doc(q, doc.nvars, "variety")?),
        None => None,
    };
    Ok((family, variety))
}

/// Renders an instance back to JSON text; `parse_instance` inverts this.
/// The binary only reads instances, so this canonical writer exists for
/// the wire-format round-trip contract and is exercised by the tests.
#[cfg_attr(not(test), allow(dead_code))]
pub fn render_instance(
    family: &[SparsePolynomial],
    variety: Option<&SparsePolynomial>,
) -> Result<String, String> {
    fn poly_to_doc(p: &SparsePolynomial) -> PolyDoc {
        let terms = p
            .terms()
            .map(|(exps, coef)| TermDoc {
                exps: exps.clone(),
                coef: format!("{}/{}", coef.numer(), coef.denom()),
            })
            .collect();
        PolyDoc { terms }
    }
    let nvars = family.first().map_or(1, |p| p.nvars());
    let doc = InstanceDoc {
        nvars,
        family: family.iter().map(poly_to_doc).collect(),
        variety: variety.map(poly_to_doc),
    };
    let mut text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_family() -> &'static str {
        r#"{"nvars":1,"family":[{"terms":[{"exps":[1],"coef":"1/1"}]}]}"#
    }

    #[test]
    fn parses_the_single_variable_family() {
        let (family, variety) = parse_instance(x_family()).unwrap();
        assert_eq!(family.len(), 1);
        assert!(variety.is_none());
        let x = SparsePolynomial::var(1, 0).unwrap();
        assert_eq!(family[0], x);
    }

    #[test]
    fn missing_nvars_is_an_error_with_position() {
        let err = parse_instance(r#"{"family":[]}"#).unwrap_err();
        assert!(err.contains("nvars"), "{err}");
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn coefficients_reduce_on_parse() {
        let text = r#"{"nvars":1,"family":[{"terms":[{"exps":[0],"coef":"2/4"}]}]}"#;
        let (family, _) = parse_instance(text).unwrap();
        let half = SparsePolynomial::constant(1, Rat::new(Int::from(1), Int::from(2)));
        assert_eq!(family[0], half);
    }

    #[test]
    fn bare_integer_coefficients_are_accepted() {
        assert_eq!(parse_coef("-3").unwrap(), Rat::new(Int::from(-3), Int::from(1)));
        assert!(parse_coef("1/0").is_err());
        assert!(parse_coef("a/b").is_err());
    }

    #[test]
    fn exponent_arity_must_match_nvars() {
        let text = r#"{"nvars":2,"family":[{"terms":[{"exps":[1],"coef":"1/1"}]}]}"#;
        let err = parse_instance(text).unwrap_err();
        assert!(err.contains("family[0]"), "{err}");
    }

    #[test]
    fn zero_polynomials_are_rejected() {
        let empty = r#"{"nvars":1,"family":[{"terms":[]}]}"#;
        assert!(parse_instance(empty).unwrap_err().contains("zero polynomial"));
        let cancels = r#"{"nvars":1,"family":[{"terms":[
            {"exps":[1],"coef":"1/1"},{"exps":[1],"coef":"-1/1"}]}]}"#;
        assert!(parse_instance(cancels).unwrap_err().contains("zero polynomial"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"nvars":1,"family":[],"extra":0}"#;
        assert!(parse_instance(text).is_err());
    }

    #[test]
    fn round_trip_is_identity() {
        let text = r#"{"nvars":2,"family":[
            {"terms":[{"exps":[2,0],"coef":"3/6"},{"exps":[0,1],"coef":"-2"}]},
            {"terms":[{"exps":[1,1],"coef":"7/2"}]}],
            "variety":{"terms":[{"exps":[0,2],"coef":"5"},{"exps":[0,0],"coef":"-1/3"}]}}"#;
        let (family, variety) = parse_instance(text).unwrap();
        let rendered = render_instance(&family, variety.as_ref()).unwrap();
        let (family2, variety2) = parse_instance(&rendered).unwrap();
        assert_eq!(family, family2);
        assert_eq!(variety, variety2);
        // A second render is byte-identical: the format is canonical.
        assert_eq!(rendered, render_instance(&family2, variety2.as_ref()).unwrap());
    }
}
