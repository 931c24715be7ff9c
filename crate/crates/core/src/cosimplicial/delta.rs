//! Morphisms of the simplex category as monotone maps `[m] → [n]`, stored
//! as their value lists.

/// Coface `δ^i: [n−1] → [n]`, skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    assert!(n >= 1 && i <= n);
    (0..n).map(|x| if x < i { x } else { x + 1 }).collect()
}

/// Codegeneracy `σ^i: [n+1] → [n]`, repeating `i`.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    assert!(i <= n);
    (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect()
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// Factor a monotone map as `η ∘ ε` with `ε` surjective onto `[j]` and `η`
/// injective. Returns `(ε, η)`.
pub fn epi_mono(map: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = map.to_vec();
    image.dedup();
    let epi = map
        .iter()
        .map(|v| image.iter().position(|x| x == v).expect("value in image"))
        .collect();
    (epi, image)
}

/// All monotone surjections `[n] ↠ [k]`, in a fixed order.
pub fn surjections(n: usize, k: usize) -> Vec<Vec<usize>> {
    // a surjection is determined by the k positions 1..=n where it steps up
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut steps = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, steps: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if steps.len() == k {
            let mut map = Vec::with_capacity(n + 1);
            let mut v = 0;
            for x in 0..=n {
                if steps.contains(&x) {
                    v += 1;
                }
                map.push(v);
            }
            out.push(map);
            return;
        }
        for s in start..=n {
            steps.push(s);
            rec(n, k, s + 1, steps, out);
            steps.pop();
        }
    }
    rec(n, k, 1, &mut steps, &mut out);
    out
}

/// All monotone maps `[m] → [n]`.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(m, n, v, cur, out);
            cur.pop();
        }
    }
    rec(m, n, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosimplicial_identities_on_maps() {
        for n in 1..5 {
            for j in 0..=n + 1 {
                for i in 0..j {
                    // δ^j δ^i = δ^i δ^{j−1}
                    assert_eq!(
                        compose(&coface(n + 1, j), &coface(n, i)),
                        compose(&coface(n + 1, i), &coface(n, j - 1))
                    );
                }
            }
        }
    }

    #[test]
    fn counting() {
        // binomial(n, k)
        assert_eq!(surjections(3, 2).len(), 3);
        assert_eq!(surjections(4, 2).len(), 6);
        assert_eq!(surjections(2, 2), vec![vec![0, 1, 2]]);
        assert_eq!(monotone_maps(1, 2).len(), 6);
    }

    #[test]
    fn factorization() {
        let (e, m) = epi_mono(&[0, 0, 2, 3, 3]);
        assert_eq!(e, vec![0, 0, 1, 2, 2]);
        assert_eq!(m, vec![0, 2, 3]);
    }
}
