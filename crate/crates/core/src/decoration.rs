//! Decorations: the per-vertex words that fix how many parents and children
//! each vertex of a permutree has.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of vertices. Pair rows are stored in `u64` words.
pub const MAX_VERTICES: usize = 64;

/// The decoration of a single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// One parent, one child.
    None,
    /// One parent, two children.
    Down,
    /// Two parents, one child.
    Up,
    /// Two parents, two children.
    UpDown,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::None, Kind::Down, Kind::Up, Kind::UpDown];

    pub fn from_letter(c: char) -> Option<Kind> {
        match c.to_ascii_lowercase() {
            'n' => Some(Kind::None),
            'd' => Some(Kind::Down),
            'u' => Some(Kind::Up),
            'b' => Some(Kind::UpDown),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Kind::None => 'n',
            Kind::Down => 'd',
            Kind::Up => 'u',
            Kind::UpDown => 'b',
        }
    }

    /// Whether the vertex has two parent slots.
    pub fn two_parents(self) -> bool {
        matches!(self, Kind::Up | Kind::UpDown)
    }

    /// Whether the vertex has two child slots.
    pub fn two_children(self) -> bool {
        matches!(self, Kind::Down | Kind::UpDown)
    }
}

/// A normalized decoration: the first and last letters are always [`Kind::None`].
///
/// Vertices are 1-indexed, so `kind(1)` is the first letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decoration {
    kinds: Vec<Kind>,
}

/// Result of normalizing a raw decoration word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub decoration: Decoration,
    /// True when an endpoint letter had to be overwritten.
    pub changed: bool,
}

/// Parses a word over `{n, d, u, b}` (case-insensitive) and overwrites both
/// endpoints with `none`.
pub fn normalize_decoration(raw: &str) -> Result<Normalized> {
    let mut kinds = Vec::with_capacity(raw.len());
    for (idx, c) in raw.chars().enumerate() {
        match Kind::from_letter(c) {
            Some(k) => kinds.push(k),
            None => {
                return Err(Error::InvalidLetter {
                    letter: c,
                    position: idx + 1,
                })
            }
        }
    }
    Decoration::normalized_from_kinds(kinds)
}

impl Decoration {
    /// Builds a decoration from explicit kinds, normalizing endpoints.
    pub fn normalized_from_kinds(mut kinds: Vec<Kind>) -> Result<Normalized> {
        if kinds.is_empty() {
            return Err(Error::EmptyDecoration);
        }
        if kinds.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(kinds.len()));
        }
        let last = kinds.len() - 1;
        let changed = kinds[0] != Kind::None || kinds[last] != Kind::None;
        kinds[0] = Kind::None;
        kinds[last] = Kind::None;
        Ok(Normalized {
            decoration: Decoration { kinds },
            changed,
        })
    }

    /// Convenience wrapper around [`normalize_decoration`] that drops the flag.
    pub fn parse(word: &str) -> Result<Decoration> {
        normalize_decoration(word).map(|n| n.decoration)
    }

    /// The same kind on every vertex (endpoints normalized).
    pub fn uniform(kind: Kind, n: usize) -> Result<Decoration> {
        Decoration::normalized_from_kinds(vec![kind; n]).map(|n| n.decoration)
    }

    /// Every normalized decoration on `n` vertices, in lexicographic order of
    /// the interior letters (`n`, `d`, `u`, `b`).
    pub fn all(n: usize) -> Vec<Decoration> {
        if n == 0 {
            return Vec::new();
        }
        let interior = n.saturating_sub(2);
        let total = 4usize.pow(interior as u32);
        (0..total)
            .map(|mut code| {
                let mut kinds = vec![Kind::None; n];
                for pos in (1..=interior).rev() {
                    kinds[pos] = Kind::ALL[code % 4];
                    code /= 4;
                }
                Decoration { kinds }
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Kind of vertex `i` (1-indexed).
    pub fn kind(&self, i: usize) -> Kind {
        self.kinds[i - 1]
    }

    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }

    /// Interior letters (positions 2..n-1).
    pub fn interior(&self) -> &[Kind] {
        let n = self.kinds.len();
        if n <= 2 {
            &[]
        } else {
            &self.kinds[1..n - 1]
        }
    }

    pub fn word(&self) -> String {
        self.kinds.iter().map(|k| k.letter()).collect()
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_normalized_word_is_unchanged() {
        let n = normalize_decoration("nbun").unwrap();
        assert_eq!(
            n.decoration.kinds(),
            &[Kind::None, Kind::UpDown, Kind::Up, Kind::None]
        );
        assert!(!n.changed);
    }

    #[test]
    fn endpoints_are_overwritten() {
        let n = normalize_decoration("ubndd").unwrap();
        assert_eq!(n.decoration.word(), "nbndn");
        assert!(n.changed);

        let single = normalize_decoration("d").unwrap();
        assert_eq!(single.decoration.word(), "n");
        assert!(single.changed);
    }

    #[test]
    fn letters_are_case_insensitive() {
        assert_eq!(Decoration::parse("NdUbN").unwrap().word(), "ndubn");
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(normalize_decoration(""), Err(Error::EmptyDecoration));
        assert_eq!(
            normalize_decoration("nxun"),
            Err(Error::InvalidLetter {
                letter: 'x',
                position: 2
            })
        );
        assert!(matches!(
            normalize_decoration(&"n".repeat(65)),
            Err(Error::TooManyVertices(65))
        ));
    }

    #[test]
    fn all_decorations_counts() {
        assert_eq!(Decoration::all(1).len(), 1);
        assert_eq!(Decoration::all(2).len(), 1);
        assert_eq!(Decoration::all(4).len(), 16);
        let five = Decoration::all(5);
        assert_eq!(five.len(), 64);
        assert_eq!(five[0].word(), "nnnnn");
        assert_eq!(five[63].word(), "nbbbn");
    }
}
