// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::{Error, Result};

/// Couplings, field and chain length of the model.
///
/// `jx > 0` sets the energy unit of most sweeps; `jy >= 0`; `h` may take either sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    jx: f64,
    jy: f64,
    h: f64,
    n_sites: usize,
}

impl ModelParams {
    pub fn new(jx: f64, jy: f64, h: f64, n_sites: usize) -> Result<Self> {
        if !(jx.is_finite() && jx > 0.0) {
            return Err(Error::InvalidParameter { name: "jx", value: jx, reason: "must be finite and > 0" });
        }
        if !(jy.is_finite() && jy >= 0.0) {
            return Err(Error::InvalidParameter { name: "jy", value: jy, reason: "must be finite and >= 0" });
        }
        if !h.is_finite() {
            return Err(Error::InvalidParameter { name: "h", value: h, reason: "must be finite" });
        }
        if n_sites == 0 || !n_sites.is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                name: "n_sites",
                value: n_sites as f64,
                reason: "must be a positive even integer",
            });
        }
        Ok(Self { jx, jy, h, n_sites })
    }

    /// `jx = 1`, `jy = r`.
    pub fn with_ratio(r: f64, h: f64, n_sites: usize) -> Result<Self> {
        Self::new(1.0, r, h, n_sites)
    }

    pub fn jx(&self) -> f64 {
        self.jx
    }

    pub fn jy(&self) -> f64 {
        self.jy
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// `jy / jx`.
    pub fn ratio(&self) -> f64 {
        self.jy / self.jx
    }

    pub fn with_h(self, h: f64) -> Result<Self> {
        Self::new(self.jx, self.jy, h, self.n_sites)
    }

    pub fn with_jy(self, jy: f64) -> Result<Self> {
        Self::new(self.jx, jy, self.h, self.n_sites)
    }

    pub fn with_n_sites(self, n_sites: usize) -> Result<Self> {
        Self::new(self.jx, self.jy, self.h, n_sites)
    }

    /// Fails unless `N` is a multiple of 4, the condition for the momentum-block solution.
    pub fn require_analytic(&self) -> Result<()> {
        if self.n_sites.is_multiple_of(4) {
            Ok(())
        } else {
            Err(Error::AnalyticUnavailable { n_sites: self.n_sites })
        }
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} jx={} jy={} r={} h={}", self.n_sites, self.jx, self.jy, self.ratio(), self.h)
    }
}

/// Nearest-neighbour bond class: `Odd` is the x-x pair (1,2), `Even` the y-y pair (2,3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bond {
    Odd,
    Even,
}

impl Bond {
    /// 1-based sites of the representative pair.
    pub fn sites(self) -> [usize; 2] {
        match self {
            Bond::Odd => [1, 2],
            Bond::Even => [2, 3],
        }
    }
}
