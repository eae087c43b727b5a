//! Brute-force periodic point enumeration, independent of matrix powers.

use super::VertexShiftSpec;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub max_period: usize,
    pub max_symbols: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            max_period: 12,
            max_symbols: 8,
        }
    }
}

fn check(shift: &VertexShiftSpec, n: usize, caps: EnumerationCaps) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("period must be at least 1"));
    }
    if n > caps.max_period {
        return Err(Error::Resource(format!(
            "period {n} exceeds the enumeration cap {}",
            caps.max_period
        )));
    }
    if shift.symbols() > caps.max_symbols {
        return Err(Error::Resource(format!(
            "{} symbols exceed the enumeration cap {}",
            shift.symbols(),
            caps.max_symbols
        )));
    }
    Ok(())
}

/// Calls `visit` with every admissible word of length `n` that closes up
/// (`w[n-1] -> w[0]`), i.e. every point with `sigma^n x = x`.
fn for_each_cycle(shift: &VertexShiftSpec, n: usize, visit: &mut impl FnMut(&[usize])) {
    fn extend(
        shift: &VertexShiftSpec,
        n: usize,
        word: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let last = *word.last().expect("word starts nonempty");
        if word.len() == n {
            if shift.allows(last, word[0]) {
                visit(word);
            }
            return;
        }
        for next in 0..shift.symbols() {
            if shift.allows(last, next) {
                word.push(next);
                extend(shift, n, word, visit);
                word.pop();
            }
        }
    }
    let mut word = Vec::with_capacity(n);
    for start in 0..shift.symbols() {
        word.push(start);
        extend(shift, n, &mut word, visit);
        word.pop();
    }
}

/// Number of points fixed by `sigma^n`, by exhaustive enumeration.
pub fn enumerate_periodic_oracle(
    shift: &VertexShiftSpec,
    n: usize,
    caps: EnumerationCaps,
) -> Result<u64> {
    check(shift, n, caps)?;
    let mut count = 0u64;
    for_each_cycle(shift, n, &mut |_| count += 1);
    Ok(count)
}

/// Sum over points fixed by `sigma^n` of the product of their orientation
/// signs; equals `trace(A^n)` for the structure matrix `A`.
pub fn enumerate_signed_periodic(
    shift: &VertexShiftSpec,
    n: usize,
    caps: EnumerationCaps,
) -> Result<i64> {
    check(shift, n, caps)?;
    let signs = shift.orientation();
    let mut total = 0i64;
    for_each_cycle(shift, n, &mut |w| {
        total += w.iter().map(|&s| i64::from(signs[s])).product::<i64>();
    });
    Ok(total)
}
