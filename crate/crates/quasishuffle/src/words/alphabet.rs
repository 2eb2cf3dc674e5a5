//! Graded alphabets: a locally finite set of letters with degrees, a total
//! order, and a partial bracket that is commutative, associative, and adds
//! degrees (or yields zero).
//!
//! Built-in alphabets:
//! - `qsym`: one letter `z<n>` per degree n, bracket z_i, z_j -> z_{i+j};
//! - `euler:<r>`: letters `z<n>_<i>` with 0 <= i < r, bracket adds degrees
//!   and the second index mod r;
//! - `trunc:<m>`: like `qsym` but only degrees <= m, bracket truncates to 0;
//! - `partition`: one letter per integer partition, bracket = multiset union.
//!
//! Custom alphabets come from a small text format, one declaration per line:
//! `letter <name> degree <n>` and `bracket <a> <b> = <c|0>`. A bracket line
//! sets the ordered pair (a, b); the reversed pair defaults to the same value
//! unless it is itself declared, so deliberately asymmetric tables (which
//! fail validation) can be written down.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// A letter is identified inside its alphabet by (degree, index), where
/// `index` enumerates the letters of that degree in the alphabet's order.
/// The derived `Ord` is the total order used everywhere: degree first, then
/// index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    degree: u32,
    index: u32,
}

impl Letter {
    pub fn new(degree: u32, index: u32) -> Self {
        assert!(degree >= 1, "letters must have positive degree");
        Letter { degree, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

#[derive(Debug, PartialEq)]
struct CustomAlphabet {
    name: String,
    /// letters per degree, in declaration order
    by_degree: BTreeMap<u32, Vec<String>>,
    name_to_letter: HashMap<String, Letter>,
    /// explicitly declared ordered pairs
    bracket: HashMap<(Letter, Letter), Option<Letter>>,
}

#[derive(Debug, PartialEq)]
enum AlphabetData {
    QSym,
    Euler { r: u32 },
    Trunc { max_degree: u32 },
    Partition,
    Custom(CustomAlphabet),
}

/// A graded alphabet. Cheap to clone; equality is structural.
#[derive(Debug, Clone)]
pub struct Alphabet(Arc<AlphabetData>);

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn qsym() -> Self {
        Alphabet(Arc::new(AlphabetData::QSym))
    }

    pub fn euler(r: u32) -> Self {
        assert!(r >= 1, "euler alphabet needs r >= 1");
        Alphabet(Arc::new(AlphabetData::Euler { r }))
    }

    pub fn trunc(max_degree: u32) -> Self {
        assert!(max_degree >= 1, "trunc alphabet needs m >= 1");
        Alphabet(Arc::new(AlphabetData::Trunc { max_degree }))
    }

    pub fn partition() -> Self {
        Alphabet(Arc::new(AlphabetData::Partition))
    }

    /// Custom alphabet from (name, degree) letter declarations and ordered
    /// bracket entries; reversed pairs default to the declared value.
    pub fn custom(
        name: &str,
        letters: &[(&str, u32)],
        brackets: &[(&str, &str, Option<&str>)],
    ) -> Result<Self> {
        let mut by_degree: BTreeMap<u32, Vec<String>> = BTreeMap::new();
        let mut name_to_letter = HashMap::new();
        for &(lname, degree) in letters {
            if degree == 0 {
                return Err(Error::Domain(format!("letter `{lname}` has degree 0")));
            }
            if name_to_letter.contains_key(lname) {
                return Err(Error::Domain(format!("duplicate letter `{lname}`")));
            }
            let bucket = by_degree.entry(degree).or_default();
            let letter = Letter::new(degree, bucket.len() as u32);
            bucket.push(lname.to_string());
            name_to_letter.insert(lname.to_string(), letter);
        }
        let mut bracket = HashMap::new();
        for &(a, b, c) in brackets {
            let la = *name_to_letter
                .get(a)
                .ok_or_else(|| Error::Domain(format!("bracket uses unknown letter `{a}`")))?;
            let lb = *name_to_letter
                .get(b)
                .ok_or_else(|| Error::Domain(format!("bracket uses unknown letter `{b}`")))?;
            let lc = match c {
                None => None,
                Some(cn) => Some(*name_to_letter.get(cn).ok_or_else(|| {
                    Error::Domain(format!("bracket uses unknown letter `{cn}`"))
                })?),
            };
            bracket.insert((la, lb), lc);
        }
        Ok(Alphabet(Arc::new(AlphabetData::Custom(CustomAlphabet {
            name: name.to_string(),
            by_degree,
            name_to_letter,
            bracket,
        }))))
    }

    /// Parse the alphabet config text format.
    pub fn from_config(name: &str, text: &str) -> Result<Self> {
        let mut letters: Vec<(String, u32)> = Vec::new();
        let mut brackets: Vec<(String, String, Option<String>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            match tokens.as_slice() {
                ["letter", lname, "degree", deg] => {
                    let degree: u32 = deg.parse().map_err(|_| Error::AlphabetConfig {
                        line,
                        message: format!("bad degree `{deg}`"),
                    })?;
                    check_letter_name(lname).map_err(|message| Error::AlphabetConfig {
                        line,
                        message,
                    })?;
                    letters.push((lname.to_string(), degree));
                }
                ["bracket", a, b, "=", c] => {
                    let target = if *c == "0" { None } else { Some(c.to_string()) };
                    brackets.push((a.to_string(), b.to_string(), target));
                }
                _ => {
                    return Err(Error::AlphabetConfig {
                        line,
                        message: format!("unrecognized declaration `{stripped}`"),
                    })
                }
            }
        }
        let letter_refs: Vec<(&str, u32)> =
            letters.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        let bracket_refs: Vec<(&str, &str, Option<&str>)> = brackets
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_deref()))
            .collect();
        Self::custom(name, &letter_refs, &bracket_refs)
    }

    /// Resolve a built-in alphabet name: `qsym`, `euler:<r>`, `trunc:<m>`,
    /// `partition`.
    pub fn by_name(name: &str) -> Result<Self> {
        if name == "qsym" {
            return Ok(Self::qsym());
        }
        if name == "partition" {
            return Ok(Self::partition());
        }
        if let Some(r) = name.strip_prefix("euler:") {
            let r: u32 = r
                .parse()
                .map_err(|_| Error::Domain(format!("bad euler order in `{name}`")))?;
            if r == 0 {
                return Err(Error::Domain("euler order must be >= 1".into()));
            }
            return Ok(Self::euler(r));
        }
        if let Some(m) = name.strip_prefix("trunc:") {
            let m: u32 = m
                .parse()
                .map_err(|_| Error::Domain(format!("bad truncation in `{name}`")))?;
            if m == 0 {
                return Err(Error::Domain("truncation must be >= 1".into()));
            }
            return Ok(Self::trunc(m));
        }
        Err(Error::Domain(format!("unknown alphabet `{name}`")))
    }

    pub fn name(&self) -> String {
        match &*self.0 {
            AlphabetData::QSym => "qsym".into(),
            AlphabetData::Euler { r } => format!("euler:{r}"),
            AlphabetData::Trunc { max_degree } => format!("trunc:{max_degree}"),
            AlphabetData::Partition => "partition".into(),
            AlphabetData::Custom(c) => c.name.clone(),
        }
    }

    /// For `euler:<r>` alphabets, the order r of the root of unity.
    pub fn euler_order(&self) -> Option<u32> {
        match &*self.0 {
            AlphabetData::Euler { r } => Some(*r),
            _ => None,
        }
    }

    pub fn is_qsym(&self) -> bool {
        matches!(&*self.0, AlphabetData::QSym)
    }

    /// The finite list of letters of a given degree, in the alphabet order.
    pub fn letters_of_degree(&self, n: u32) -> Vec<Letter> {
        if n == 0 {
            return vec![];
        }
        match &*self.0 {
            AlphabetData::QSym => vec![Letter::new(n, 0)],
            AlphabetData::Euler { r } => (0..*r).map(|i| Letter::new(n, i)).collect(),
            AlphabetData::Trunc { max_degree } => {
                if n <= *max_degree {
                    vec![Letter::new(n, 0)]
                } else {
                    vec![]
                }
            }
            AlphabetData::Partition => (0..partitions_of(n).len() as u32)
                .map(|i| Letter::new(n, i))
                .collect(),
            AlphabetData::Custom(c) => {
                let count = c.by_degree.get(&n).map_or(0, Vec::len);
                (0..count as u32).map(|i| Letter::new(n, i)).collect()
            }
        }
    }

    /// All letters of degree <= bound, ascending in the alphabet order.
    pub fn letters_up_to(&self, bound: u32) -> Vec<Letter> {
        (1..=bound).flat_map(|n| self.letters_of_degree(n)).collect()
    }

    /// The partial bracket [a, b]; `None` plays the role of zero.
    pub fn bracket(&self, a: Letter, b: Letter) -> Option<Letter> {
        match &*self.0 {
            AlphabetData::QSym => Some(Letter::new(a.degree + b.degree, 0)),
            AlphabetData::Euler { r } => {
                Some(Letter::new(a.degree + b.degree, (a.index + b.index) % r))
            }
            AlphabetData::Trunc { max_degree } => {
                let d = a.degree + b.degree;
                if d <= *max_degree {
                    Some(Letter::new(d, 0))
                } else {
                    None
                }
            }
            AlphabetData::Partition => {
                let mut parts = partitions_of(a.degree)[a.index as usize].clone();
                parts.extend_from_slice(&partitions_of(b.degree)[b.index as usize]);
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let d = a.degree + b.degree;
                let idx = index_of_partition(d, &parts);
                Some(Letter::new(d, idx))
            }
            AlphabetData::Custom(c) => match c.bracket.get(&(a, b)) {
                Some(v) => *v,
                None => c.bracket.get(&(b, a)).copied().flatten(),
            },
        }
    }

    /// The display name of a letter.
    pub fn letter_name(&self, l: Letter) -> String {
        match &*self.0 {
            AlphabetData::QSym | AlphabetData::Trunc { .. } => format!("z{}", l.degree),
            AlphabetData::Euler { .. } => format!("z{}_{}", l.degree, l.index),
            AlphabetData::Partition => {
                let parts = partitions_of(l.degree)[l.index as usize].clone();
                let body: Vec<String> = parts.iter().map(u32::to_string).collect();
                format!("z{}", body.join("_"))
            }
            AlphabetData::Custom(c) => c.by_degree[&l.degree][l.index as usize].clone(),
        }
    }

    /// Resolve a letter name.
    pub fn lookup(&self, name: &str) -> Result<Letter> {
        let fail = || Error::UnknownLetter {
            name: name.to_string(),
            alphabet: self.name(),
        };
        match &*self.0 {
            AlphabetData::QSym => {
                let n: u32 = name.strip_prefix('z').and_then(|s| s.parse().ok()).ok_or_else(fail)?;
                if n == 0 {
                    return Err(fail());
                }
                Ok(Letter::new(n, 0))
            }
            AlphabetData::Trunc { max_degree } => {
                let n: u32 = name.strip_prefix('z').and_then(|s| s.parse().ok()).ok_or_else(fail)?;
                if n == 0 || n > *max_degree {
                    return Err(fail());
                }
                Ok(Letter::new(n, 0))
            }
            AlphabetData::Euler { r } => {
                let body = name.strip_prefix('z').ok_or_else(fail)?;
                let (n, i) = body.split_once('_').ok_or_else(fail)?;
                let n: u32 = n.parse().map_err(|_| fail())?;
                let i: u32 = i.parse().map_err(|_| fail())?;
                if n == 0 || i >= *r {
                    return Err(fail());
                }
                Ok(Letter::new(n, i))
            }
            AlphabetData::Partition => {
                let body = name.strip_prefix('z').ok_or_else(fail)?;
                let mut parts: Vec<u32> = Vec::new();
                for piece in body.split('_') {
                    let p: u32 = piece.parse().map_err(|_| fail())?;
                    if p == 0 {
                        return Err(fail());
                    }
                    parts.push(p);
                }
                if parts.is_empty() {
                    return Err(fail());
                }
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let degree: u32 = parts.iter().sum();
                Ok(Letter::new(degree, index_of_partition(degree, &parts)))
            }
            AlphabetData::Custom(c) => c.name_to_letter.get(name).copied().ok_or_else(fail),
        }
    }

    /// The partition carried by a letter of the `partition` alphabet.
    pub fn partition_of_letter(&self, l: Letter) -> Option<Vec<u32>> {
        match &*self.0 {
            AlphabetData::Partition => Some(partitions_of(l.degree)[l.index as usize].clone()),
            _ => None,
        }
    }
}

fn check_letter_name(name: &str) -> std::result::Result<(), String> {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Err(format!("letter name `{name}` must start with a letter")),
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("letter name `{name}` has invalid characters"));
    }
    if name == "sh" {
        return Err("`sh` is reserved for the shuffle operator".into());
    }
    Ok(())
}

/// Partitions of n as nonincreasing part lists, in descending lexicographic
/// order (so (n) comes first and (1,...,1) last).
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, out: &mut Vec<Vec<u32>>, acc: &mut Vec<u32>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        let top = max.min(n);
        for p in (1..=top).rev() {
            acc.push(p);
            rec(n - p, p, out, acc);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut out, &mut Vec::new());
    out
}

fn index_of_partition(degree: u32, parts: &[u32]) -> u32 {
    partitions_of(degree)
        .iter()
        .position(|p| p == parts)
        .expect("partition must exist") as u32
}

/// The iterated bracket [S] of a nonempty letter sequence:
/// [a] = a and [a, S] = [a, [S]].
pub fn bracket_sequence(alphabet: &Alphabet, s: &[Letter]) -> Option<Letter> {
    assert!(!s.is_empty(), "bracket of an empty sequence");
    let mut acc = s[s.len() - 1];
    for &l in s[..s.len() - 1].iter().rev() {
        acc = alphabet.bracket(l, acc)?;
    }
    Some(acc)
}

/// One axiom violation found by `validate_alphabet`, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// [a,b] != [b,a]
    Symmetry {
        a: String,
        b: String,
        left: String,
        right: String,
    },
    /// [[a,b],c] != [a,[b,c]]
    Associativity {
        a: String,
        b: String,
        c: String,
        left: String,
        right: String,
    },
    /// [a,b] nonzero but of the wrong degree
    Degree {
        a: String,
        b: String,
        result: String,
        expected: u32,
        got: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Symmetry { a, b, left, right } => {
                write!(f, "symmetry: [{a},{b}] = {left} but [{b},{a}] = {right}")
            }
            Violation::Associativity { a, b, c, left, right } => write!(
                f,
                "associativity: [[{a},{b}],{c}] = {left} but [{a},[{b},{c}]] = {right}"
            ),
            Violation::Degree {
                a,
                b,
                result,
                expected,
                got,
            } => write!(
                f,
                "degree: [{a},{b}] = {result} has degree {got}, expected {expected}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub bound: u32,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the bracket axioms on all letter pairs/triples of total degree
/// <= `degree_bound`: symmetry and degree additivity on pairs, associativity
/// on triples. (Zero-absorption is structural: zero is not a letter.)
pub fn validate_alphabet(alphabet: &Alphabet, degree_bound: u32) -> ValidationReport {
    let mut violations = Vec::new();
    let letters = alphabet.letters_up_to(degree_bound);
    let name = |l: Option<Letter>| match l {
        None => "0".to_string(),
        Some(l) => alphabet.letter_name(l),
    };
    for &a in &letters {
        for &b in &letters {
            if a.degree() + b.degree() > degree_bound {
                continue;
            }
            let ab = alphabet.bracket(a, b);
            let ba = alphabet.bracket(b, a);
            if ab != ba {
                violations.push(Violation::Symmetry {
                    a: name(Some(a)),
                    b: name(Some(b)),
                    left: name(ab),
                    right: name(ba),
                });
            }
            if let Some(c) = ab {
                if c.degree() != a.degree() + b.degree() {
                    violations.push(Violation::Degree {
                        a: name(Some(a)),
                        b: name(Some(b)),
                        result: name(Some(c)),
                        expected: a.degree() + b.degree(),
                        got: c.degree(),
                    });
                }
            }
        }
    }
    for &a in &letters {
        for &b in &letters {
            for &c in &letters {
                if a.degree() + b.degree() + c.degree() > degree_bound {
                    continue;
                }
                let left = alphabet.bracket(a, b).and_then(|x| alphabet.bracket(x, c));
                let right = alphabet.bracket(b, c).and_then(|x| alphabet.bracket(a, x));
                if left != right {
                    violations.push(Violation::Associativity {
                        a: name(Some(a)),
                        b: name(Some(b)),
                        c: name(Some(c)),
                        left: name(left),
                        right: name(right),
                    });
                }
            }
        }
    }
    ValidationReport {
        bound: degree_bound,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qsym_letters_and_bracket() {
        let a = Alphabet::qsym();
        assert_eq!(a.letters_of_degree(3), vec![Letter::new(3, 0)]);
        let z1 = a.lookup("z1").unwrap();
        let z2 = a.lookup("z2").unwrap();
        assert_eq!(a.bracket(z1, z2), Some(a.lookup("z3").unwrap()));
    }

    #[test]
    fn trunc_bracket_cuts_off() {
        let a = Alphabet::trunc(2);
        let z1 = a.lookup("z1").unwrap();
        let z2 = a.lookup("z2").unwrap();
        assert_eq!(a.bracket(z1, z1), Some(z2));
        assert_eq!(a.bracket(z1, z2), None);
        assert!(a.letters_of_degree(3).is_empty());
    }

    #[test]
    fn euler_bracket_wraps_class() {
        let a = Alphabet::euler(2);
        let z11 = a.lookup("z1_1").unwrap();
        let z10 = a.lookup("z1_0").unwrap();
        assert_eq!(a.bracket(z11, z11), Some(a.lookup("z2_0").unwrap()));
        assert_eq!(a.bracket(z10, z11), Some(a.lookup("z2_1").unwrap()));
        assert_eq!(a.letters_of_degree(4).len(), 2);
    }

    #[test]
    fn partition_letters_and_union() {
        let a = Alphabet::partition();
        let deg2: Vec<String> = a
            .letters_of_degree(2)
            .into_iter()
            .map(|l| a.letter_name(l))
            .collect();
        assert_eq!(deg2, vec!["z2", "z1_1"]);
        let z1 = a.lookup("z1").unwrap();
        let z11 = a.lookup("z1_1").unwrap();
        assert_eq!(a.bracket(z1, z1), Some(z11));
        let z21 = a.lookup("z2_1").unwrap();
        let z2 = a.lookup("z2").unwrap();
        assert_eq!(a.bracket(z2, z1), Some(z21));
    }

    #[test]
    fn bracket_sequence_examples() {
        let a = Alphabet::qsym();
        let z = |n| a.lookup(&format!("z{n}")).unwrap();
        assert_eq!(bracket_sequence(&a, &[z(1), z(2), z(3)]), Some(z(6)));
        assert_eq!(bracket_sequence(&a, &[z(4)]), Some(z(4)));
        // order independence on a sample
        assert_eq!(
            bracket_sequence(&a, &[z(2), z(1), z(3)]),
            bracket_sequence(&a, &[z(3), z(2), z(1)])
        );
        let t = Alphabet::trunc(2);
        let t1 = t.lookup("z1").unwrap();
        let t2 = t.lookup("z2").unwrap();
        // a zero inner bracket kills the whole sequence
        assert_eq!(bracket_sequence(&t, &[t1, t2]), None);
        assert_eq!(bracket_sequence(&t, &[t1, t1, t1]), None);
    }

    #[test]
    fn builtin_alphabets_validate() {
        for a in [
            Alphabet::qsym(),
            Alphabet::euler(2),
            Alphabet::euler(3),
            Alphabet::trunc(3),
            Alphabet::partition(),
        ] {
            let report = validate_alphabet(&a, 8);
            assert!(report.is_valid(), "{}: {:?}", a.name(), report.violations);
        }
    }

    #[test]
    fn zero_bracket_alphabet_validates() {
        let a = Alphabet::custom("free", &[("a", 1), ("b", 1), ("c", 1)], &[]).unwrap();
        assert!(validate_alphabet(&a, 10).is_valid());
    }

    #[test]
    fn asymmetric_table_reports_symmetry_violation() {
        let a = Alphabet::custom(
            "bad",
            &[("a", 1), ("b", 1), ("c", 2)],
            &[("a", "b", Some("c")), ("b", "a", None)],
        )
        .unwrap();
        let report = validate_alphabet(&a, 4);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Symmetry { .. })));
    }

    #[test]
    fn config_round_trip() {
        let text = "\
# two letters
letter a degree 1
letter b degree 2
bracket a a = b
";
        let a = Alphabet::from_config("demo", text).unwrap();
        let la = a.lookup("a").unwrap();
        let lb = a.lookup("b").unwrap();
        assert_eq!(a.bracket(la, la), Some(lb));
        assert_eq!(a.bracket(la, lb), None);
        assert!(validate_alphabet(&a, 6).is_valid());
    }

    #[test]
    fn config_errors_carry_line_numbers() {
        let err = Alphabet::from_config("demo", "letter a degree x").unwrap_err();
        assert!(matches!(err, Error::AlphabetConfig { line: 1, .. }));
    }

    #[test]
    fn alphabet_by_name() {
        assert_eq!(Alphabet::by_name("qsym").unwrap(), Alphabet::qsym());
        assert_eq!(Alphabet::by_name("euler:2").unwrap(), Alphabet::euler(2));
        assert_eq!(Alphabet::by_name("trunc:5").unwrap(), Alphabet::trunc(5));
        assert!(Alphabet::by_name("nope").is_err());
    }
}
