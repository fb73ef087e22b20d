//! `pairing`: the Hopf pairing between the Borel parts of the formal
//! presentation, on generators and on the grouplikes `K_α`.

use cqg_core::coeffring::{LSeries, Rat, SeriesH};
use cqg_core::hopf::pairing::{Pairing, PairingOptions};
use cqg_core::ncalg::{Algebra, AnyAlgebra, Presentation};
use cqg_core::Error;

use super::grid_label;
use crate::config::RunConfig;
use crate::report::{check, CheckRecord};

const UNIT: &str = "(1|1) = 1";
const CARTAN: &str = "(Ξ_α|Ξ_β) = (α|β)/h for all intervals";
const ROOTS: &str = "(X+_α|X-_β) = δ_{αβ}/(q - q^-1) for all intervals";
const GROUPLIKES: &str = "the extension of the pairing gives (K_α|K_β) = q^{(α|β)} to O(h^N) for all pairs";
const GROUPLIKES_DOUBLED: &str =
    "diagnostic: with the Cartan value doubled to 2(α|β)/h the extension gives (K_α|K_β) = q^{(α|β)} to O(h^N)";

pub(super) fn pairing(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    if !cfg.presentations(&[Presentation::UhTrunc]).contains(&Presentation::UhTrunc) {
        return out;
    }
    let n = cfg.truncation;
    for g in cfg.sub_grids() {
        let name = |what: &str| format!("pairing/{}/{what}", grid_label(&g));
        // Pairing a degree-k Cartan monomial divides by h^k: values to O(h^N)
        // at grouplike degree N - 1 need truncation 2N - 1.
        let a = match cfg.spec(Presentation::UhTrunc, &g).with_truncation(2 * n - 1).build() {
            Ok(AnyAlgebra::Formal(a)) => a,
            Ok(AnyAlgebra::Poly(_)) => unreachable!("UhTrunc is formal"),
            Err(e) => {
                out.push(check(name("build"), "the presentation can be built", || Err(e)));
                continue;
            }
        };
        out.push(check(name("unit"), UNIT, || unit(&a, n)));
        out.push(check(name("cartan-generators"), CARTAN, || cartan(&a, n)));
        out.push(check(name("root-vectors"), ROOTS, || roots(&a, n)));
        out.push(check(name("grouplikes"), GROUPLIKES, || grouplikes(&a, n, PairingOptions::default())));
        let doubled = PairingOptions { cartan_scale: Rat::from_integer(2), ..PairingOptions::default() };
        out.push(check(name("grouplikes-doubled-cartan-value"), GROUPLIKES_DOUBLED, || grouplikes(&a, n, doubled)));
    }
    out
}

fn unit(a: &Algebra<SeriesH>, n: usize) -> cqg_core::Result<Option<String>> {
    let p = Pairing::new(a, PairingOptions::default())?;
    let got = p.pair(&a.unit(), &a.unit())?;
    let expected = LSeries::new(0, n as i64, vec![Rat::from_integer(1)]);
    Ok((!got.agrees_with(&expected)).then(|| format!("(1|1) = {got}")))
}

fn cartan(a: &Algebra<SeriesH>, n: usize) -> cqg_core::Result<Option<String>> {
    let p = Pairing::new(a, PairingOptions::default())?;
    let q = a.quiver();
    for x in q.ids() {
        for y in q.ids() {
            let u = a.parse(&format!("Xi{}", q.interval(x)))?;
            let v = a.parse(&format!("Xi{}", q.interval(y)))?;
            let got = p.pair(&u, &v)?;
            let expected = LSeries::new(-1, n as i64, vec![Rat::from_integer(q.sym(x, y) as i128)]);
            if !got.agrees_with(&expected) {
                return Ok(Some(format!("(Xi{}|Xi{}) = {got}, expected {expected}", q.interval(x), q.interval(y))));
            }
        }
    }
    Ok(None)
}

fn roots(a: &Algebra<SeriesH>, n: usize) -> cqg_core::Result<Option<String>> {
    let p = Pairing::new(a, PairingOptions::default())?;
    let q = a.quiver();
    let order = a.order();
    let qmqi = LSeries::from_series(&SeriesH::q_pow(order, 1).sub(&SeriesH::q_pow(order, -1)), 0);
    // (X+|X-) has a simple pole; multiplying by q - q^-1 = h + O(h^3) keeps N - 2 orders.
    let prec = n as i64 - 2;
    for x in q.ids() {
        for y in q.ids() {
            let got = p.pair(&a.parse(&format!("X+{}", q.interval(x)))?, &a.parse(&format!("X-{}", q.interval(y)))?)?.mul(&qmqi);
            let expected = LSeries::new(0, prec, vec![Rat::from_integer(i128::from(x == y))]);
            if !got.agrees_with(&expected) || got.prec() < prec {
                return Ok(Some(format!("(q - q^-1)(X+{}|X-{}) = {got}, expected {expected}", q.interval(x), q.interval(y))));
            }
        }
    }
    Ok(None)
}

fn grouplikes(a: &Algebra<SeriesH>, n: usize, opts: PairingOptions) -> cqg_core::Result<Option<String>> {
    let p = Pairing::new(a, opts)?;
    let q = a.quiver();
    for x in q.ids() {
        for y in q.ids() {
            let got = p.pair_grouplikes(x, y, n - 1)?;
            let s = q.sym(x, y);
            let expected = LSeries::from_series(&SeriesH::q_pow(n, s), 0);
            if got.prec() < n as i64 {
                return Err(Error::Structural(format!("(K{}|K{}) known only to O(h^{})", q.interval(x), q.interval(y), got.prec())));
            }
            if !got.agrees_with(&expected) {
                return Ok(Some(format!("(K{}|K{}) = {got}, expected q^{s} = {expected}", q.interval(x), q.interval(y))));
            }
        }
    }
    Ok(None)
}
