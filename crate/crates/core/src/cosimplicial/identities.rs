use crate::error::{Error, Result};

/// Checks every cosimplicial identity among the structure maps up to level
/// `top`. `coface(s, i)` is `d^i` out of level `s`, `codegeneracy(s, i)` is
/// `s^i` out of level `s`, `compose(a, b)` is `a ∘ b`.
pub(crate) fn check<M: PartialEq>(
    what: &str,
    top: usize,
    coface: impl Fn(usize, usize) -> M,
    codegeneracy: impl Fn(usize, usize) -> M,
    compose: impl Fn(&M, &M) -> M,
    identity: impl Fn(usize) -> M,
) -> Result<()> {
    let fail = |msg: String| Err(Error::IdentityViolated(format!("{what}: {msg}")));
    // d^j d^i = d^i d^{j−1} for i < j, from level s to s + 2
    for s in 0..top.saturating_sub(1) {
        for j in 1..=s + 2 {
            for i in 0..j {
                if compose(&coface(s + 1, j), &coface(s, i)) != compose(&coface(s + 1, i), &coface(s, j - 1)) {
                    return fail(format!("d^{j} d^{i} ≠ d^{i} d^{} at level {s}", j - 1));
                }
            }
        }
    }
    // s^j s^i = s^i s^{j+1} for i ≤ j, from level s to s − 2
    for s in 2..=top {
        for j in 0..=s - 2 {
            for i in 0..=j {
                if compose(&codegeneracy(s - 1, j), &codegeneracy(s, i))
                    != compose(&codegeneracy(s - 1, i), &codegeneracy(s, j + 1))
                {
                    return fail(format!("s^{j} s^{i} ≠ s^{i} s^{} at level {s}", j + 1));
                }
            }
        }
    }
    // s^j d^i, from level s through s + 1 back to s
    for s in 0..top {
        for j in 0..=s {
            for i in 0..=s + 1 {
                let lhs = compose(&codegeneracy(s + 1, j), &coface(s, i));
                let rhs = if i < j {
                    compose(&coface(s - 1, i), &codegeneracy(s, j - 1))
                } else if i == j || i == j + 1 {
                    identity(s)
                } else {
                    compose(&coface(s - 1, i - 1), &codegeneracy(s, j))
                };
                if lhs != rhs {
                    return fail(format!("s^{j} d^{i} identity fails at level {s}"));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Op {
    Coface(usize),
    Codegeneracy(usize),
}

impl Op {
    /// Structure maps out of level `s` in a truncation at `top`, with targets.
    pub fn out_of(s: usize, top: usize) -> Vec<(Op, usize)> {
        let mut ops = Vec::new();
        if s < top {
            ops.extend((0..=s + 1).map(|i| (Op::Coface(i), s + 1)));
        }
        ops.extend((0..s).map(|i| (Op::Codegeneracy(i), s - 1)));
        ops
    }
}

/// Checks that every horizontal structure map commutes with every vertical
/// one. `horizontal(b, a, op)` acts out of `X^{a,b}` in the first index,
/// `vertical(a, b, op)` in the second.
pub(crate) fn check_commuting<M: PartialEq>(
    what: &str,
    top: usize,
    horizontal: impl Fn(usize, usize, Op) -> M,
    vertical: impl Fn(usize, usize, Op) -> M,
    compose: impl Fn(&M, &M) -> M,
) -> Result<()> {
    for a in 0..=top {
        for b in 0..=top {
            for (h, a2) in Op::out_of(a, top) {
                for (v, b2) in Op::out_of(b, top) {
                    let lhs = compose(&vertical(a2, b, v), &horizontal(b, a, h));
                    let rhs = compose(&horizontal(b2, a, h), &vertical(a, b, v));
                    if lhs != rhs {
                        return Err(Error::IdentityViolated(format!(
                            "{what}: horizontal {h:?} and vertical {v:?} do not commute at ({a}, {b})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}
