//! Words over a graded alphabet, their lexicographic order, and the Lyndon
//! machinery: recognition, enumeration, counting via the Poincare series,
//! and the standard factorization into a nonincreasing product of Lyndon
//! words.

use super::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::scalars::series::TruncSeries;
use crate::scalars::{divisors, mobius, rat_int, Rat};
use num_traits::Zero;

/// A finite (possibly empty) sequence of letters. The derived `Ord` is the
/// lexicographic order with `u < uv`, which together with the letter order
/// is exactly the word order used for Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Length l(w): the number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree |w|: the sum of the letter degrees.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn prepended(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Render with the alphabet's letter names, dot-joined; the empty word
    /// prints as `1`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&l| alphabet.letter_name(l))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// All words of the given degree, in lexicographic order. Degree 0 gives the
/// empty word alone.
pub fn words_of_degree(alphabet: &Alphabet, n: u32) -> Vec<Word> {
    fn rec(alphabet: &Alphabet, n: u32, acc: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if n == 0 {
            out.push(Word(acc.clone()));
            return;
        }
        for d in 1..=n {
            for l in alphabet.letters_of_degree(d) {
                acc.push(l);
                rec(alphabet, n - d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(alphabet, n, &mut Vec::new(), &mut out);
    out
}

/// All words of degree 0..=n, ascending by degree.
pub fn words_up_to_degree(alphabet: &Alphabet, n: u32) -> Vec<Word> {
    (0..=n).flat_map(|d| words_of_degree(alphabet, d)).collect()
}

/// A nonempty word is Lyndon when it is strictly smaller than each of its
/// proper suffixes.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = w.letters();
    for k in 1..letters.len() {
        if letters[k..] <= *letters {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All Lyndon words of the given degree, lexicographically sorted.
///
/// Enumeration filters every word of the degree through `is_lyndon`; the
/// input sizes here make that tractable and it is obviously faithful to the
/// definition.
pub fn lyndon_words(alphabet: &Alphabet, n: u32) -> Vec<Word> {
    assert!(n >= 1);
    words_of_degree(alphabet, n)
        .into_iter()
        .filter(|w| is_lyndon(w).unwrap())
        .collect()
}

/// The number of Lyndon words of degree n, computed from the Poincare series
/// A(x) = 1/(1 - sum_m card(A_m) x^m) by Moebius inversion of its logarithmic
/// derivative coefficients.
pub fn lyndon_count(alphabet: &Alphabet, n: u32) -> u64 {
    assert!(n >= 1);
    let trunc = n as usize;
    let mut denom = TruncSeries::one(trunc);
    for m in 1..=n {
        let card = alphabet.letters_of_degree(m).len() as i64;
        denom.set_coeff(m as usize, rat_int(-card));
    }
    let a_series = denom.invert().expect("constant term is 1");
    let c = a_series.c_sequence().expect("constant term is 1");
    let mut total = Rat::zero();
    for d in divisors(n as u64) {
        let mu = mobius(n as u64 / d);
        if mu != 0 {
            total += rat_int(mu) * &c[d as usize - 1];
        }
    }
    let count = total / rat_int(n as i64);
    assert!(
        count.is_integer() && count >= Rat::zero(),
        "Lyndon count must be a nonnegative integer, got {count}"
    );
    let big = count.to_integer();
    u64::try_from(big).expect("count fits in u64")
}

/// The unique factorization of a nonempty word as a concatenation of a
/// nonincreasing sequence of Lyndon words (Duval's algorithm).
pub fn lyndon_factorization(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.letters();
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let piece = j - k;
        while i <= k {
            out.push(Word(s[i..i + piece].to_vec()));
            i += piece;
        }
    }
    Ok(out)
}
