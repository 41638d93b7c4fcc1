/// Size caps for validation and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier (ring or module) that may be built at all.
    pub max_carrier: usize,
    /// Binary laws are checked on every pair up to this carrier size.
    pub exhaustive_pairs: usize,
    /// Ternary laws are checked on every triple up to this carrier size.
    pub exhaustive_triples: usize,
    /// Random triples (or pairs) checked above the exhaustive caps.
    pub samples: usize,
    /// Largest carrier whose ideals or submodules may be enumerated.
    pub enumeration: usize,
    /// Largest number of candidate generator assignments tried when
    /// enumerating homomorphisms.
    pub hom_candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_carrier: 1 << 16,
            exhaustive_pairs: 4096,
            exhaustive_triples: 512,
            samples: 100_000,
            enumeration: 1024,
            hom_candidates: 1 << 22,
        }
    }
}

/// Carriers at most this large keep full Cayley tables.
pub(crate) const TABLE_SIZE: usize = 1024;
/// Action tables are kept while `|R|·|M|` stays at most this large.
pub(crate) const ACTION_TABLE_SIZE: usize = 1 << 20;
