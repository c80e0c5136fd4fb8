//! Built-in regression catalog of intersection arrays with known
//! Q-polynomial structure counts.

use crate::array::{parse_array, IntersectionArray, ParseError};

/// One catalog array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub array: &'static str,
    /// Number of Q-polynomial structures, when known.
    pub expected_q: Option<usize>,
    /// Whether a graph with this array is known to exist.
    pub realized: bool,
}

impl CatalogEntry {
    pub fn parse(&self) -> Result<IntersectionArray, ParseError> {
        parse_array(self.array)
    }
}

const fn entry(name: &'static str, array: &'static str, q: usize, realized: bool) -> CatalogEntry {
    CatalogEntry {
        name,
        array,
        expected_q: Some(q),
        realized,
    }
}

const BUILTIN: &[CatalogEntry] = &[
    entry("H(3,2)", "3,2,1;1,2,3", 1, true),
    entry("H(4,2)", "4,3,2,1;1,2,3,4", 2, true),
    entry("H(5,2)", "5,4,3,2,1;1,2,3,4,5", 1, true),
    entry("H(6,2)", "6,5,4,3,2,1;1,2,3,4,5,6", 2, true),
    entry("halved 7-cube", "21,10,3;1,6,15", 2, true),
    entry("halved 9-cube", "36,21,10,3;1,6,15,28", 2, true),
    entry("folded 7-cube", "7,6,5;1,2,3", 2, true),
    entry("folded 9-cube", "9,8,7,6;1,2,3,4", 2, true),
    entry("folded 6-cube", "6,5,4;1,2,6", 2, true),
    entry("2A5(2)", "42,40,32;1,5,21", 2, true),
    entry("2A7(2)", "170,168,160,128;1,5,21,85", 2, true),
    entry("2A7(3)", "2460,2457,2430,2187;1,10,91,820", 2, true),
    entry("Hadamard graph, gamma = 4", "8,7,4,1;1,4,7,8", 2, true),
    entry("Hadamard graph, gamma = 6", "12,11,6,1;1,6,11,12", 2, true),
    entry("J(8,4)", "16,9,4,1;1,4,9,16", 1, true),
    entry("J(6,3)", "9,4,1;1,4,9", 2, true),
    entry("Petersen graph", "3,2;1,1", 2, true),
    entry("Heawood graph", "3,2,2;1,1,3", 2, true),
    entry("Coxeter graph", "3,2,2,1;1,1,1,2", 0, true),
    entry("dodecahedron", "3,2,1,1,1;1,1,1,2,3", 0, true),
    entry("icosahedron", "5,2,1;1,2,5", 2, true),
    entry("Tutte 8-cage", "3,2,2,2;1,1,1,3", 0, true),
    entry("Foster graph", "3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3", 0, true),
    entry("Taylor array, k = 5, a1 = 0", "5,4,1;1,4,5", 1, true),
    entry("C_7", "2,1,1;1,1,1", 3, true),
    entry("C_8", "2,1,1,1;1,1,1,2", 2, true),
    entry("self-dual array, mu = 2", "10,5,4,2;1,2,2,10", 2, false),
    entry("odd graph O_4", "4,3,3;1,1,2", 1, true),
    entry("Wells graph", "5,4,1,1;1,1,4,5", 0, true),
    entry("Sylvester graph", "5,4,2;1,1,4", 0, true),
    entry("Gosset graph", "27,10,1;1,10,27", 2, true),
    entry("Desargues graph", "3,2,2,1,1;1,1,2,2,3", 0, true),
    entry("Biggs-Smith graph", "3,2,2,2,1,1,1;1,1,1,1,1,1,3", 0, true),
];

/// The built-in catalog, in a fixed order.
pub fn builtin_catalog() -> &'static [CatalogEntry] {
    BUILTIN
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        assert!(builtin_catalog().len() >= 20);
        for e in builtin_catalog() {
            e.parse().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }
}
