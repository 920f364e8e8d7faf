use std::fmt;

/// A required initial energy: a nonnegative integer, or infinity when no
/// finite budget suffices.
///
/// `Infinity` is a real sentinel, not a saturated integer, and compares
/// greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Energy {
    Finite(i64),
    Infinity,
}

impl Energy {
    pub fn is_finite(self) -> bool {
        matches!(self, Energy::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Energy::Finite(x) => Some(x),
            Energy::Infinity => None,
        }
    }

    /// Adds a (possibly negative) weight; infinity absorbs.
    pub fn plus(self, w: i64) -> Energy {
        match self {
            Energy::Finite(x) => Energy::Finite(x + w),
            Energy::Infinity => Energy::Infinity,
        }
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Energy::Finite(x) => write!(f, "{x}"),
            Energy::Infinity => write!(f, "inf"),
        }
    }
}

/// Per-vertex energy values, indexed by vertex id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnergyFunction {
    values: Vec<Energy>,
}

impl EnergyFunction {
    pub fn zeros(n: usize) -> Self {
        EnergyFunction {
            values: vec![Energy::Finite(0); n],
        }
    }

    pub fn all_infinite(n: usize) -> Self {
        EnergyFunction {
            values: vec![Energy::Infinity; n],
        }
    }

    pub fn from_values(values: Vec<Energy>) -> Self {
        debug_assert!(values
            .iter()
            .all(|e| e.finite().map_or(true, |x| x >= 0)));
        EnergyFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Energy {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, e: Energy) {
        debug_assert!(e.finite().map_or(true, |x| x >= 0));
        self.values[v] = e;
    }

    pub fn values(&self) -> &[Energy] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = Energy> + '_ {
        self.values.iter().copied()
    }
}
