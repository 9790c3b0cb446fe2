//! Exact-arithmetic combinatorics of symplectic nilpotent orbits.
//!
//! The crate mechanizes the partition calculus behind Fourier-coefficient
//! vanishing for automorphic forms on Sp_2n:
//!
//! - [`partition`]: partitions, transposes, dominance and lexicographic
//!   orderings, enumeration;
//! - [`symplectic`]: symplectic and special predicates, the
//!   collapse/expansion recipes, and exhaustive-search oracles for both;
//! - [`bv`]: Barbasch-Vogan duality from so_2n+1-type partitions to Sp_2n;
//! - [`dual`]: classification data of the unramified unitary dual of p-adic
//!   Sp_2n — strongly negative and negative Jordan data, unitary membership,
//!   attached orbits;
//! - [`arthur`]: Arthur parameters, their partitions and vanishing bounds,
//!   and assembly of local classification data;
//! - [`vanishing`]: the bound formulas for the four single-character core
//!   types, the duality identity, and the dominance/lex verdict engine;
//! - [`squareclass`]: square classes of Q and quadratic-residue prime
//!   search;
//! - [`sampling`]: deterministic generators for verification campaigns.
//!
//! All arithmetic is exact: partitions are integer vectors, exponents are
//! rationals.

pub mod arthur;
pub mod bv;
pub mod character;
pub mod dual;
pub mod error;
pub mod partition;
pub mod sampling;
pub mod squareclass;
pub mod symplectic;
pub mod vanishing;
pub mod wire;

/// Exact rational exponents.
pub type Rational = num_rational::Ratio<i64>;

pub use arthur::{
    build_local_data, ArthurParameter, DualType, LocalSatakeData, SatakeEntry, SimpleParameter,
};
pub use bv::{bv_dual, bv_dual_of, q_minus, OddOrthogonalPartition};
pub use character::UnramifiedCharacter;
pub use dual::{
    check_uunr, classify_type, enumerate_jord_sn, jord_of_negative, orbit_partition, Condition,
    ETriple, JordanBlock, Membership, NegativeData, ReprType, StronglyNegativeData,
    UnitaryDualPoint,
};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, OrderRelation, Partition};
pub use squareclass::{
    class_product, legendre, parity_condition, qr_primes, squarefree_class, SquareClass,
};
pub use symplectic::{
    enumerate_symplectic, is_special_symplectic, is_symplectic, sp_collapse, sp_collapse_oracle,
    sp_expand, sp_expand_oracle,
};
pub use vanishing::{
    bound_for, bound_type_i, bound_type_ii, bound_type_iii, bound_type_iv, eq424_identity,
    type_i_closed_form, verdict, verify_duality_identity, BoundSource, VanishingBound, Verdict,
    VerdictMode,
};
