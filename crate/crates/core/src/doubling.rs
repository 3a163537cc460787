use crate::error::Result;
use crate::par;

/// All powers `x^0 ..= x^maxpow` of an element of an associative structure.
///
/// Round `r` squares `x^(2^(r-1))` and then multiplies every known power
/// below it by that square, so each round is two multiplication stages and
/// the number of powers roughly doubles. Exactly `maxpow - 1` products are
/// formed when `maxpow >= 2`.
pub fn powers_by_doubling<T, F>(one: T, base: T, maxpow: usize, mul: F) -> Result<Vec<T>>
where
    T: Clone + Send + Sync,
    F: Fn(&T, &T) -> Result<T> + Sync + Send,
{
    let mut powers = vec![one];
    if maxpow == 0 {
        return Ok(powers);
    }
    powers.push(base);
    let mut top = 1;
    while powers.len() <= maxpow {
        let square = mul(&powers[top], &powers[top])?;
        top *= 2;
        powers.push(square);
        let want = (maxpow + 1 - powers.len()).min(top - 1);
        let square = &powers[top];
        let fresh = par::map_indexed(want, |i| mul(&powers[i + 1], square));
        for p in fresh {
            powers.push(p?);
        }
    }
    Ok(powers)
}
