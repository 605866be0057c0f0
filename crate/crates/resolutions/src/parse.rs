//! Parser for elements of B ⊗ B written as signed sums of elementary
//! tensors `left#right`, where each side is an algebra-element product
//! expression (e.g. `1#x - x#1`, `g^2#g + 2*x#1`).

use algebra::{parse_element, Algebra};
use exactcore::FMatrix;

use crate::error::ResolutionError;

/// Parse a pair-coordinate row (1 × dim²) from a signed sum of `l#r` terms.
pub fn parse_tensor_element(b: &Algebra, src: &str) -> Result<FMatrix, ResolutionError> {
    let f = &b.field;
    let n = b.dim;
    let bad = |msg: &str| ResolutionError::BadElement(format!("{msg} in `{src}`"));

    // split into signed terms at the top level (labels never contain +/-)
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut seen_any = false;
    for ch in src.chars() {
        if ch == '+' || ch == '-' {
            if cur.trim().is_empty() {
                if seen_any || ch == '+' {
                    return Err(bad("empty term"));
                }
            } else {
                terms.push((neg, cur.trim().to_string()));
            }
            neg = ch == '-';
            cur.clear();
            seen_any = true;
        } else {
            cur.push(ch);
            if !ch.is_whitespace() {
                seen_any = true;
            }
        }
    }
    if cur.trim().is_empty() {
        return Err(bad("empty term"));
    }
    terms.push((neg, cur.trim().to_string()));

    let mut acc = FMatrix::zeros(f, 1, n * n);
    for (negated, term) in terms {
        let Some((l, r)) = term.split_once('#') else {
            return Err(bad("term has no `#`"));
        };
        if r.contains('#') {
            return Err(bad("term has more than one `#`"));
        }
        let lv = parse_element(b, l).map_err(|e| bad(&e.to_string()))?;
        let rv = parse_element(b, r).map_err(|e| bad(&e.to_string()))?;
        let mut prod = lv.kron(&rv);
        if negated {
            prod = prod.scale(f.neg(1));
        }
        acc = acc.add(&prod);
    }
    Ok(acc)
}
