//! Square classes of the rationals and quadratic-residue prime search.
//!
//! Elements of Q*/(Q*)^2 are represented by squarefree integers with sign,
//! 1 being the trivial class. The prime search realizes, over Q, the fact
//! that finitely many square classes become squares at infinitely many
//! places: it returns odd primes modulo which every given class is a
//! quadratic residue, detected by the Legendre symbol.

use crate::arthur::ArthurParameter;
use crate::error::{Error, Result};

/// An element of Q*/(Q*)^2: a squarefree nonzero integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(i64);

impl SquareClass {
    /// The class of an arbitrary nonzero integer: its squarefree part, sign
    /// preserved.
    pub fn new(x: i64) -> Result<Self> {
        if x == 0 {
            return Err(Error::ZeroSquareClass);
        }
        Ok(SquareClass(squarefree_part(x)))
    }

    pub const TRIVIAL: SquareClass = SquareClass(1);

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_trivial(self) -> bool {
        self.0 == 1
    }
}

impl std::ops::Mul for SquareClass {
    type Output = SquareClass;

    fn mul(self, other: SquareClass) -> SquareClass {
        let product = i128::from(self.0) * i128::from(other.0);
        SquareClass(squarefree_part_i128(product))
    }
}

impl std::fmt::Display for SquareClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Squarefree part of a nonzero integer, sign preserved.
pub fn squarefree_class(x: i64) -> Result<SquareClass> {
    SquareClass::new(x)
}

fn squarefree_part(x: i64) -> i64 {
    squarefree_part_i128(i128::from(x))
}

fn squarefree_part_i128(x: i128) -> i64 {
    let sign = if x < 0 { -1 } else { 1 };
    let mut n = x.unsigned_abs();
    let mut result: u128 = 1;
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut count = 0u32;
            while n % d == 0 {
                n /= d;
                count += 1;
            }
            if count % 2 == 1 {
                result *= d;
            }
        }
        d += 1;
    }
    result *= n; // leftover prime
    sign * i64::try_from(result).expect("squarefree part of an i64 product fits in i64")
}

/// Squarefree class of a product of classes with integer exponents; only the
/// exponent parities matter.
pub fn class_product(pairs: &[(SquareClass, u64)]) -> SquareClass {
    pairs
        .iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(SquareClass::TRIVIAL, |acc, (c, _)| acc * *c)
}

/// Parity obstruction on the central data of an Arthur parameter: over Q,
/// the exponent vector of the odd-b central classes must vanish mod 2
/// componentwise, which is exactly triviality of their class product. This
/// coincides with the central-character clause of parameter validation.
pub fn parity_condition(psi: &ArthurParameter) -> bool {
    let pairs: Vec<(SquareClass, u64)> = psi
        .blocks
        .iter()
        .map(|block| (block.central_class, u64::from(block.b)))
        .collect();
    class_product(&pairs).is_trivial()
}

/// Legendre symbol (a/p) for an odd prime p: 1 for a nonzero quadratic
/// residue, -1 for a non-residue, 0 when p divides a. Computed by quadratic
/// reciprocity through the Jacobi-symbol iteration.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && p % 2 == 1);
    let mut a = a.rem_euclid(p as i64) as u64;
    let mut m = p;
    let mut sign = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        a %= m;
    }
    if m == 1 {
        sign
    } else {
        0
    }
}

/// The first `count` odd primes p <= limit dividing none of the classes and
/// making every class a quadratic residue (Legendre symbol +1); -1 in a
/// class is equivalent to requiring p = 1 mod 4.
pub fn qr_primes(classes: &[SquareClass], count: usize, limit: u64) -> Result<Vec<u64>> {
    let mut found = Vec::with_capacity(count);
    for p in sieve_primes(limit) {
        if p == 2 {
            continue;
        }
        let admissible = classes
            .iter()
            .all(|c| c.value().unsigned_abs() % p != 0 && legendre(c.value(), p) == 1);
        if admissible {
            found.push(p);
            if found.len() == count {
                return Ok(found);
            }
        }
    }
    Err(Error::InsufficientPrimes {
        requested: count,
        found: found.len(),
        limit,
    })
}

fn sieve_primes(limit: u64) -> impl Iterator<Item = u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes.into_iter()
}
