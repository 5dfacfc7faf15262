use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Reserved name of the unit letter `1_A`.
pub const UNIT_NAME: &str = "1";

/// A generator of a graded alphabet, or the degree-0 unit letter.
///
/// Letters are cheap to clone: the name is shared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    name: Arc<str>,
    degree: u32,
}

impl Letter {
    /// Builds an alphabet letter. Callers go through [`crate::Alphabet`] to get
    /// validated letters; this constructor does not check the degree.
    pub fn new(name: &str, degree: u32) -> Self {
        Letter {
            name: Arc::from(name),
            degree,
        }
    }

    pub fn unit() -> Self {
        static UNIT: OnceLock<Arc<str>> = OnceLock::new();
        Letter {
            name: UNIT.get_or_init(|| Arc::from(UNIT_NAME)).clone(),
            degree: 0,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0 && &*self.name == UNIT_NAME
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.name, &other.name) {
            return self.degree.cmp(&other.degree);
        }
        self.name
            .cmp(&other.name)
            .then(self.degree.cmp(&other.degree))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Letter names are identifiers; `e` is taken by the empty-word literal `[e]`.
pub(crate) fn is_valid_letter_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_reserved_name(name: &str) -> bool {
    name == "e" || name == UNIT_NAME
}
