use crate::dyerlashof::{is_admissible, word_degree, AdmissibleWord};
use crate::error::Result;

/// Admissible words `Q^I(y)` of even total degree at most `max_degree`, for
/// `y` running over classes of the given degrees, including the bare class
/// (empty word). Generators are emitted unpaired: which partner in the
/// Bockstein pair a word becomes is left to the caller.
///
/// Output is ordered by base, then degree, then entries.
pub fn enumerate_e1_generators(
    p: u64,
    base_degrees: &[u64],
    max_degree: u64,
) -> Result<Vec<AdmissibleWord>> {
    // Validates p (odd prime) even when there are no bases.
    is_admissible(&[], 0, p)?;
    let mut out = Vec::new();
    for &base in base_degrees {
        let mut words = Vec::new();
        if base > max_degree {
            continue;
        }
        let mut stack = vec![Vec::<(u8, u64)>::new()];
        // Suffixes of admissible words are admissible, so words grow by
        // prepending and non-admissible words are never extended.
        while let Some(entries) = stack.pop() {
            let deg = word_degree(&entries, base, p);
            if deg % 2 == 0 {
                words.push(AdmissibleWord::new(entries.clone(), base));
            }
            let room = max_degree - deg;
            let max_i = (room + 1) / (2 * (p - 1));
            for i in 1..=max_i {
                for e in 0..=1u8 {
                    if 2 * i * (p - 1) - e as u64 > room {
                        continue;
                    }
                    let mut next = vec![(e, i)];
                    next.extend_from_slice(&entries);
                    if is_admissible(&next, base, p)? {
                        stack.push(next);
                    }
                }
            }
        }
        words.sort_by(|a, b| {
            (a.degree(p), &a.entries).cmp(&(b.degree(p), &b.entries))
        });
        out.extend(words);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_only_at_low_bound() {
        let g = enumerate_e1_generators(3, &[2], 2).unwrap();
        assert_eq!(g, vec![AdmissibleWord::new(vec![], 2)]);
    }

    #[test]
    fn includes_q2_on_a1() {
        let g = enumerate_e1_generators(3, &[2], 10).unwrap();
        let q2 = AdmissibleWord::new(vec![(0, 2)], 2);
        assert!(g.contains(&q2));
        assert_eq!(q2.degree(3), 10);
        assert!(g.iter().all(|w| w.degree(3) % 2 == 0 && w.degree(3) <= 10));
    }

    #[test]
    fn empty_base_list() {
        assert!(enumerate_e1_generators(3, &[], 100).unwrap().is_empty());
    }

    #[test]
    fn matches_brute_force() {
        let (p, base, bound) = (3u64, 2u64, 60u64);
        let got = enumerate_e1_generators(p, &[base], bound).unwrap();
        let mut expected = Vec::new();
        let opts: Vec<(u8, u64)> = (1..=15).flat_map(|i| [(0, i), (1, i)]).collect();
        let mut frontier = vec![Vec::new()];
        for _ in 0..=4 {
            let mut grown = Vec::new();
            for w in &frontier {
                let word = AdmissibleWord::new(w.clone(), base);
                let d = word.degree(p);
                if d <= bound && d % 2 == 0 && word.is_admissible(p).unwrap() {
                    expected.push(word);
                }
                if d > bound {
                    continue;
                }
                for &o in &opts {
                    let mut n = w.clone();
                    n.push(o);
                    grown.push(n);
                }
            }
            frontier = grown;
        }
        expected.sort_by(|a, b| (a.degree(p), &a.entries).cmp(&(b.degree(p), &b.entries)));
        expected.dedup();
        assert_eq!(got, expected);
    }

    #[test]
    fn base_above_bound() {
        assert!(enumerate_e1_generators(3, &[12], 10).unwrap().is_empty());
    }

    #[test]
    fn rejects_even_prime() {
        assert!(enumerate_e1_generators(2, &[2], 10).is_err());
    }
}
