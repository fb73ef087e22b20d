//! Seeded random words and expressions for property checks and suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffring::Scalar;
use crate::ncalg::{Algebra, CMono, CartanModel, Expr, Letter, Word};

/// Which letters a sampled word may contain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letters {
    /// Root vectors of both signs and Cartan letters.
    All,
    /// `X+` and Cartan letters (positive Borel part).
    PlusBorel,
    /// `X-` and Cartan letters (negative Borel part).
    MinusBorel,
}

/// Deterministic generator used throughout the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random letter: a root vector on any interval, or a Cartan letter on a
/// single cell (`K_c^{±1}` or `Ξ_c`).
pub fn random_letter<S: Scalar, R: Rng>(alg: &Algebra<S>, rng: &mut R, letters: Letters) -> Letter {
    let q = alg.quiver();
    let ids: Vec<_> = q.ids().collect();
    let kinds: &[u8] = match letters {
        Letters::All => &[0, 1, 2],
        Letters::PlusBorel => &[0, 2],
        Letters::MinusBorel => &[1, 2],
    };
    match kinds.choose(rng).unwrap() {
        0 => Letter::P(*ids.choose(rng).unwrap()),
        1 => Letter::M(*ids.choose(rng).unwrap()),
        _ => {
            let c = rng.gen_range(0..q.num_cells());
            let e = match alg.model() {
                CartanModel::Exponential => {
                    if rng.gen_bool(0.5) {
                        1
                    } else {
                        -1
                    }
                }
                CartanModel::Polynomial => 1,
            };
            let mut m = CMono::ONE;
            m.0[c] = e;
            Letter::C(m)
        }
    }
}

/// A random word of length `1..=max_len`.
pub fn random_word<S: Scalar, R: Rng>(alg: &Algebra<S>, rng: &mut R, max_len: usize, letters: Letters) -> Word {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| random_letter(alg, rng, letters)).collect()
}

/// A random combination of up to `max_terms` words with small integer
/// coefficients (not normalized).
pub fn random_expr<S: Scalar, R: Rng>(alg: &Algebra<S>, rng: &mut R, max_terms: usize, max_len: usize, letters: Letters) -> Expr<S> {
    let n = rng.gen_range(1..=max_terms);
    let mut out = Expr::new();
    for _ in 0..n {
        let mut c = rng.gen_range(1..=3i128);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        out.add_term(random_word(alg, rng, max_len, letters), alg.int_s(c));
    }
    out
}
