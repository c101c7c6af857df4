//! Seeded random inputs shared by the verify suites and the tests.

use ene::algebra::{Gaussian, Poly, RationalFunction};
use ene::ene::RootDivisor;
use ene::transalg::{transalg_make, EneSymbol, Generator, GeneratorProduct, TransalgebraicFunction};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type CaseRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CaseRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero roots in ℚ(i) used for random divisors and poles.
pub fn root_pool() -> Vec<Gaussian> {
    vec![
        Gaussian::from_int(1),
        Gaussian::from_int(2),
        Gaussian::from_int(-1),
        Gaussian::from_int(-3),
        Gaussian::ratio(1, 2),
        Gaussian::ratio(-2, 3),
        Gaussian::complex(1, 1, 1, 1),
        Gaussian::complex(2, 1, -1, 1),
        Gaussian::complex(0, 1, 1, 1),
        Gaussian::complex(-2, 3, 1, 5),
    ]
}

/// Parameters for the generator law.
pub fn parameter_pool() -> Vec<Gaussian> {
    vec![
        Gaussian::from_int(1),
        Gaussian::from_int(2),
        Gaussian::from_int(-1),
        Gaussian::ratio(1, 2),
        Gaussian::complex(1, 1, 1, 1),
    ]
}

pub fn small_scalar(rng: &mut CaseRng) -> Gaussian {
    let p = rng.random_range(-4..=4);
    let q = rng.random_range(1..=3);
    if rng.random_bool(0.25) {
        let c = rng.random_range(-3..=3);
        Gaussian::complex(p, q, c, 1)
    } else {
        Gaussian::ratio(p, q)
    }
}

pub fn nonzero_scalar(rng: &mut CaseRng) -> Gaussian {
    loop {
        let s = small_scalar(rng);
        if !num_traits::Zero::is_zero(&s) {
            return s;
        }
    }
}

/// Positive multiplicities at pool roots, total degree `1..=max_degree`.
pub fn root_divisor(rng: &mut CaseRng, max_degree: usize) -> RootDivisor {
    let pool = root_pool();
    let degree = rng.random_range(1..=max_degree);
    let mut d = RootDivisor::new();
    for _ in 0..degree {
        d.add(pool.choose(rng).expect("nonempty").clone(), 1)
            .expect("pool roots are nonzero");
    }
    d
}

/// A generator product regular at 0: simple factors, Euler symbols of
/// order in `-2..=3`, and positive-degree monomials.
pub fn generator_product(rng: &mut CaseRng) -> GeneratorProduct {
    let pool = root_pool();
    let n = rng.random_range(1..=3);
    let factors = (0..n).map(|_| {
        let u = pool.choose(rng).expect("nonempty").clone();
        match rng.random_range(0..4) {
            0 => Generator::Symbol(EneSymbol::new(0, u, Gaussian::from_int(rng.random_range(-2..=2))).expect("nonzero")),
            1 | 2 => {
                let m = *[-2, -1, 1, 2, 3].choose(rng).expect("nonempty");
                Generator::Symbol(EneSymbol::new(m, u, nonzero_scalar(rng)).expect("nonzero"))
            }
            _ => Generator::Monomial {
                degree: rng.random_range(1..=3),
                coeff: nonzero_scalar(rng),
            },
        }
    });
    GeneratorProduct::from_factors(factors.collect::<Vec<_>>())
}

/// Poles of order `≤ 4` at up to three pool points (0 allowed), plus a
/// polynomial part.
pub fn rational_exponent(rng: &mut CaseRng) -> RationalFunction {
    let mut pool = root_pool();
    pool.push(Gaussian::from_int(0));
    let mut out = RationalFunction::from_poly(Poly::new(
        (0..rng.random_range(0..=3)).map(|_| small_scalar(rng)).collect(),
    ));
    let points = rng.random_range(0..=3);
    for _ in 0..points {
        let rho = pool.choose(rng).expect("nonempty").clone();
        let order = rng.random_range(1..=4usize);
        let lin = Poly::linear_root(&rho);
        for j in 1..=order {
            let c = if j == order { nonzero_scalar(rng) } else { small_scalar(rng) };
            let term = RationalFunction::new(Poly::constant(c), lin.pow(j as u32)).expect("nonzero");
            out = &out + &term;
        }
    }
    out
}

/// `R0·e^{R1}` with `R0` a product of pool linear factors (and possibly
/// `z`) to signed powers.
pub fn transalgebraic(rng: &mut CaseRng) -> TransalgebraicFunction {
    let mut pool = root_pool();
    pool.push(Gaussian::from_int(0));
    let mut rat = RationalFunction::constant(nonzero_scalar(rng));
    for _ in 0..rng.random_range(0..=3) {
        let rho = pool.choose(rng).expect("nonempty").clone();
        let lin = RationalFunction::from_poly(Poly::linear_root(&rho));
        let m = *[-2, -1, 1, 2].choose(rng).expect("nonempty");
        rat = &rat * &lin.pow(m).expect("nonzero");
    }
    transalg_make(rat, rational_exponent(rng)).expect("nonzero rational part")
}
