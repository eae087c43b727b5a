use super::{zeta_basic_set, SystemSpec};
use crate::error::{Error, Result};
use crate::linalg::char_reversed;
use crate::poly::RationalFunction;

/// Solved Morse polynomial identity
/// `P^((-1)^q) * prod_{u(i) <= q} Z_i = prod_{k <= q} det(I - chi_k(M) t)^((-1)^(k+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseReport {
    pub q: usize,
    /// Names of the basic sets with index at most `q`, sorted.
    pub contributing: Vec<String>,
    pub lhs_product: RationalFunction,
    pub rhs_product: RationalFunction,
    pub p_of_t: RationalFunction,
    /// Whether the solved `P(t)` lies in `Z[t]`.
    pub is_integer_polynomial: bool,
    /// Whether the system asserts homological splitting at exactly `q`.
    pub split_asserted: bool,
}

fn alternating(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Solves for `P(t)` rather than assuming it exists; a non-polynomial
/// result signals that the splitting hypothesis fails or the data is wrong.
pub fn morse_split_check(system: &SystemSpec, q: usize) -> Result<MorseReport> {
    let Some(dim) = system.ambient_dim else {
        return Err(Error::validation("Morse check needs the ambient dimension"));
    };
    if q > dim {
        return Err(Error::validation(format!(
            "q = {q} exceeds the ambient dimension {dim}"
        )));
    }
    let missing: Vec<String> = (0..=q)
        .filter(|k| !system.ambient_maps.contains_key(k))
        .map(|k| format!("missing ambient homology map in degree {k}"))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Validation(missing));
    }

    let mut contributing = Vec::new();
    let mut lhs = RationalFunction::one();
    for b in system.sorted_basic_sets() {
        if b.index_u <= q {
            lhs = lhs.mul(&zeta_basic_set(b, dim)?);
            contributing.push(b.name.clone());
        }
    }
    let mut rhs = RationalFunction::one();
    for (k, m) in system.ambient_maps.range(0..=q) {
        let p = char_reversed(&m.to_rational())?;
        rhs = rhs.mul(&RationalFunction::from_polynomial(p).powi(alternating(*k))?);
    }
    let sign = if q.is_multiple_of(2) { 1 } else { -1 };
    let p_of_t = rhs.div(&lhs)?.powi(sign)?;
    if p_of_t.powi(sign)?.mul(&lhs) != rhs {
        return Err(Error::Invariant("solved P(t) does not satisfy the Morse identity".into()));
    }
    Ok(MorseReport {
        q,
        contributing,
        is_integer_polynomial: p_of_t.is_integer_polynomial(),
        lhs_product: lhs,
        rhs_product: rhs,
        p_of_t,
        split_asserted: system.split_at == Some(q),
    })
}
