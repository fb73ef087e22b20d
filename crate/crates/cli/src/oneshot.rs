//! One-shot computations behind the `normalform`, `coproduct`, `antipode`,
//! `membership` and `limit` subcommands.
//!
//! Each returns the canonical text of the result together with a JSON
//! rendering `{presentation, grid, input, result}` (the membership report
//! for `membership`).

use serde_json::{json, Value};

use cqg_core::classical::limit::{enveloping_of, limit_coordinate, limit_enveloping, Specialize};
use cqg_core::ncalg::{Algebra, AnyAlgebra, Presentation};
use cqg_core::qdp;

use crate::config::RunConfig;
use crate::error::Result;
use crate::suites::with_algebra;

/// Result of a one-shot computation.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn build(cfg: &RunConfig) -> Result<AnyAlgebra> {
    Ok(cfg.spec(cfg.element_presentation(), &cfg.grid).build()?)
}

fn output(cfg: &RunConfig, input: &str, text: String) -> Output {
    let json = json!({
        "presentation": cfg.element_presentation(),
        "grid": cfg.grid,
        "input": input,
        "result": text,
    });
    Output { text, json }
}

/// Normal form of `expr`.
pub fn normalform(cfg: &RunConfig, expr: &str) -> Result<Output> {
    let alg = build(cfg)?;
    let text = with_algebra!(&alg, a => a.text(&a.parse(expr)?));
    Ok(output(cfg, expr, text))
}

/// `Δ(expr)`, every tensor slot in normal form.
pub fn coproduct(cfg: &RunConfig, expr: &str) -> Result<Output> {
    let alg = build(cfg)?;
    let text = with_algebra!(&alg, a => a.tensor_text(&a.coproduct(&a.parse(expr)?)?));
    Ok(output(cfg, expr, text))
}

/// `S(expr)`.
pub fn antipode(cfg: &RunConfig, expr: &str) -> Result<Output> {
    let alg = build(cfg)?;
    let text = with_algebra!(&alg, a => a.text(&a.antipode(&a.parse(expr)?)?));
    Ok(output(cfg, expr, text))
}

/// Membership of `expr` in `U′` to the configured depth (`Uq` or `UhTrunc`).
pub fn membership(cfg: &RunConfig, expr: &str) -> Result<Output> {
    cfg.validate()?;
    let alg = build(cfg)?;
    let report = with_algebra!(&alg, a => qdp::membership(a, &a.parse(expr)?, cfg.depth)?);
    let verdicts: Vec<String> = report
        .verdicts
        .iter()
        .map(|v| match &v.witness {
            None => format!("n={}: divisible", v.n),
            Some(w) => format!("n={}: not divisible (coefficient {} of {})", v.n, w.coefficient, w.word),
        })
        .collect();
    let text = format!("{}: {}\n{}", report.element, if report.pass { "pass" } else { "fail" }, verdicts.join("\n"));
    Ok(Output { text, json: serde_json::to_value(&report).expect("membership reports serialize") })
}

/// The `q = 1` (resp. `h = 0`) limit: in the enveloping algebra for `Uq`,
/// `UhTrunc` and `ClassicalU`, in the commutative coordinate ring for
/// `UqTilde` and `UhTildeTrunc`.
pub fn limit(cfg: &RunConfig, expr: &str) -> Result<Output> {
    let alg = build(cfg)?;
    let text = with_algebra!(&alg, a => limit_text(a, expr)?);
    Ok(output(cfg, expr, text))
}

fn limit_text<S: Specialize>(a: &Algebra<S>, expr: &str) -> cqg_core::Result<String> {
    let e = a.parse(expr)?;
    match a.presentation() {
        Presentation::UqTilde | Presentation::UhTildeTrunc => Ok(limit_coordinate(a, &e)?.text(a.quiver())),
        _ => {
            let cl = enveloping_of(a)?;
            Ok(cl.text(&limit_enveloping(a, &cl, &e)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(p: Presentation) -> RunConfig {
        RunConfig { presentation: Some(p), ..RunConfig::default() }
    }

    #[test]
    fn one_shot_texts() {
        let uq = cfg(Presentation::Uq);
        assert_eq!(normalform(&uq, "K[0,1)*K^-1[0,1)").unwrap().text, "1");
        assert_eq!(normalform(&uq, "(q-1)*H[0,1)*K^-1[1,2)").unwrap().text, "(-1 + q)*H[0,1)*K^-1[1,2)");
        assert_eq!(coproduct(&uq, "X+[0,1)").unwrap().text, "1 (x) X+[0,1) + X+[0,1) (x) 1 + (-1 + q)*H[0,1) (x) X+[0,1)");
        assert_eq!(antipode(&uq, "K[0,1)").unwrap().text, "K^-1[0,1)");
        assert_eq!(limit(&uq, "(q+1)*H[0,1)").unwrap().text, "(2)*xi[0,1)");
        assert_eq!(limit(&cfg(Presentation::UqTilde), "K[0,1)").unwrap().text, "K[0,1)");
        let m = membership(&uq, "H[0,1)").unwrap();
        assert!(m.text.starts_with("H[0,1): fail\nn=1: not divisible"), "{}", m.text);
        assert_eq!(m.json["verdicts"][0]["n"], 1);
        let j = normalform(&uq, "X+[0,1)").unwrap().json;
        assert_eq!((j["presentation"].as_str(), j["result"].as_str()), (Some("Uq"), Some("X+[0,1)")));
    }

    #[test]
    fn one_shot_errors() {
        let uq = cfg(Presentation::Uq);
        assert!(matches!(normalform(&uq, "X+[0,5)"), Err(crate::CliError::Core(cqg_core::Error::OffGrid(_)))));
        assert!(matches!(normalform(&uq, "Xi[0,1)"), Err(crate::CliError::Core(cqg_core::Error::UnknownGenerator { .. }))));
        assert!(matches!(membership(&cfg(Presentation::UqTilde), "H[0,1)"), Err(crate::CliError::Core(cqg_core::Error::Domain(_)))));
    }
}
