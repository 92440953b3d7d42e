use std::fmt;

/// Which procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Reachable synchronized pairs of plant and specification.
    Synchronized,
    /// Reachability in the triple product test automaton.
    Product,
    /// Reduction of insertion-removal attacks to conventional observability.
    Reduction,
    /// Exhaustive bounded enumeration.
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Synchronized => "synchronized",
            Method::Product => "product",
            Method::Reduction => "reduction",
            Method::BruteForce => "brute-force",
        })
    }
}

/// Outcome of a decision procedure: the property holds, or it fails with a
/// witness of type `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub witness: Option<W>,
    pub method: Method,
}

impl<W> Verdict<W> {
    pub fn holds(method: Method) -> Self {
        Verdict {
            witness: None,
            method,
        }
    }

    pub fn fails(witness: W, method: Method) -> Self {
        Verdict {
            witness: Some(witness),
            method,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.witness.is_none()
    }
}
