//! Compositions of integers, the refinement order, and the action of
//! compositions on words through the bracket.

use super::alphabet::{bracket_sequence, Alphabet};
use super::word::Word;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// A finite sequence of positive integers. The empty composition is the
/// unique composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Weight |I|: the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Length l(I): the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Proper partial sums (the descent subset of {1..n-1} attached to I).
    pub fn partial_sums(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// The composition of `n` whose proper partial sums are `descents`
    /// (a subset of {1..n-1}).
    pub fn from_descents(n: u32, descents: &BTreeSet<u32>) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in descents {
            debug_assert!(d > prev && d < n);
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Composition(v)
    }

    pub fn concat(&self, other: &Composition) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn display(&self) -> String {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("({})", body.join(","))
    }
}

/// All compositions of n (optionally of a fixed length), in ascending
/// lexicographic order on the part sequences. `n = 0` yields the empty
/// composition alone.
pub fn compositions(n: u32, length: Option<usize>) -> Vec<Composition> {
    fn rec(n: u32, acc: &mut Vec<u32>, out: &mut Vec<Composition>, length: Option<usize>) {
        if n == 0 {
            if length.is_none_or(|k| k == acc.len()) {
                out.push(Composition(acc.clone()));
            }
            return;
        }
        if let Some(k) = length {
            if acc.len() >= k {
                return;
            }
        }
        for p in 1..=n {
            acc.push(p);
            rec(n - p, acc, out, length);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out, length);
    out
}

/// The composition J o I: the parts of I summed in blocks whose sizes are
/// the parts of J. Requires |J| = l(I).
pub fn compose(j: &Composition, i: &Composition) -> Result<Composition> {
    if j.weight() as usize != i.len() {
        return Err(Error::LengthMismatch(format!(
            "|J| = {} but l(I) = {}",
            j.weight(),
            i.len()
        )));
    }
    let mut parts = Vec::with_capacity(j.len());
    let mut pos = 0;
    for &jp in j.parts() {
        let block: u32 = i.parts()[pos..pos + jp as usize].iter().sum();
        parts.push(block);
        pos += jp as usize;
    }
    Ok(Composition(parts))
}

/// Does I refine K (written I >= K)? True exactly when K arises from I by
/// summing consecutive blocks, i.e. K's partial sums are among I's.
pub fn refines(i: &Composition, k: &Composition) -> bool {
    i.weight() == k.weight() && k.partial_sums().is_subset(&i.partial_sums())
}

/// All refinements of K (every I with I >= K), including K itself.
pub fn refinements(k: &Composition) -> Vec<Composition> {
    let mut out = vec![Composition::empty()];
    for &part in k.parts() {
        let pieces = compositions(part, None);
        let mut next = Vec::with_capacity(out.len() * pieces.len());
        for prefix in &out {
            for piece in &pieces {
                next.push(prefix.concat(piece));
            }
        }
        out = next;
    }
    out
}

/// All coarsenings of I (every K with I >= K), including I itself.
pub fn coarsenings(i: &Composition) -> Vec<Composition> {
    compositions(i.len() as u32, None)
        .iter()
        .map(|j| compose(j, i).expect("|J| = l(I) by construction"))
        .collect()
}

/// The action I[w]: replace the consecutive blocks of w cut out by the parts
/// of I with their iterated brackets. `None` when some block brackets to
/// zero. Requires |I| = l(w).
pub fn act(i: &Composition, w: &Word, alphabet: &Alphabet) -> Result<Option<Word>> {
    if i.weight() as usize != w.len() {
        return Err(Error::LengthMismatch(format!(
            "|I| = {} but l(w) = {}",
            i.weight(),
            w.len()
        )));
    }
    let mut letters = Vec::with_capacity(i.len());
    let mut pos = 0;
    for &p in i.parts() {
        let block = &w.letters()[pos..pos + p as usize];
        match bracket_sequence(alphabet, block) {
            None => return Ok(None),
            Some(l) => letters.push(l),
        }
        pos += p as usize;
    }
    Ok(Some(Word::from_letters(letters)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word::words_of_degree;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            compositions(4, Some(2)),
            vec![c(&[1, 3]), c(&[2, 2]), c(&[3, 1])]
        );
        assert_eq!(compositions(4, None).len(), 8);
        assert_eq!(compositions(1, None), vec![c(&[1])]);
        assert_eq!(compositions(0, None), vec![Composition::empty()]);
    }

    #[test]
    fn composition_of_compositions() {
        assert_eq!(compose(&c(&[2, 1]), &c(&[1, 2, 1])).unwrap(), c(&[3, 1]));
        let i = c(&[2, 1, 3]);
        let ones = c(&[1, 1, 1]);
        assert_eq!(compose(&ones, &i).unwrap(), i);
        assert_eq!(compose(&c(&[3]), &i).unwrap(), c(&[6]));
        assert!(compose(&c(&[2]), &i).is_err());
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&c(&[1, 1]), &c(&[2])));
        assert!(!refines(&c(&[2]), &c(&[1, 1])));
        assert!(refines(&c(&[2, 1]), &c(&[2, 1])));
        assert!(!refines(&c(&[1, 2]), &c(&[2, 2])));
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=7u32 {
            let all = compositions(n, None);
            for i in &all {
                assert!(refines(i, i));
                for k in &all {
                    if refines(i, k) && refines(k, i) {
                        assert_eq!(i, k);
                    }
                    for m in &all {
                        if refines(i, k) && refines(k, m) {
                            assert!(refines(i, m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn refinements_and_coarsenings_agree_with_refines() {
        let k = c(&[2, 1]);
        let refs = refinements(&k);
        assert_eq!(refs.len(), 2); // (2,1) and (1,1,1)
        for i in &refs {
            assert!(refines(i, &k));
        }
        let i = c(&[1, 1, 1]);
        let coars = coarsenings(&i);
        assert_eq!(coars.len(), 4);
        for k in &coars {
            assert!(refines(&i, k));
        }
    }

    #[test]
    fn action_examples() {
        let a = Alphabet::qsym();
        let z = |n: u32| a.lookup(&format!("z{n}")).unwrap();
        let w = Word::from_letters(vec![z(1), z(1), z(2)]);
        let acted = act(&c(&[2, 1]), &w, &a).unwrap().unwrap();
        assert_eq!(acted, Word::from_letters(vec![z(2), z(2)]));
        assert_eq!(act(&c(&[1, 1, 1]), &w, &a).unwrap().unwrap(), w);
        assert!(act(&c(&[2]), &w, &a).is_err());

        let free = Alphabet::custom("free", &[("a", 1), ("b", 1)], &[]).unwrap();
        let ab = Word::from_letters(vec![free.lookup("a").unwrap(), free.lookup("b").unwrap()]);
        assert_eq!(act(&c(&[2]), &ab, &free).unwrap(), None);
    }

    #[test]
    fn action_composes() {
        // I[J[w]] = (I o J)[w] over qsym through length 5
        let a = Alphabet::qsym();
        for deg in 1..=5u32 {
            for w in words_of_degree(&a, deg) {
                let n = w.len() as u32;
                for j in compositions(n, None) {
                    let jw = act(&j, &w, &a).unwrap().expect("qsym bracket is total");
                    for i in compositions(j.len() as u32, None) {
                        let lhs = act(&i, &jw, &a).unwrap();
                        let ij = compose(&i, &j).unwrap();
                        let rhs = act(&ij, &w, &a).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn action_preserves_degree() {
        let a = Alphabet::partition();
        for deg in 1..=4u32 {
            for w in words_of_degree(&a, deg) {
                for i in compositions(w.len() as u32, None) {
                    if let Some(v) = act(&i, &w, &a).unwrap() {
                        assert_eq!(v.degree(), w.degree());
                    }
                }
            }
        }
    }
}
