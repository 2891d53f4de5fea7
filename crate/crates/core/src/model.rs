//! Dimensionless form of the radial problem for V(r) = a r − b/r.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::{lit, to_f64, Real};

/// Physical inputs: reduced mass, string tension `a`, Coulomb strength `b`, ħ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams<T> {
    pub mass: T,
    pub a: T,
    pub b: T,
    pub hbar: T,
}

impl<T: Real> PhysicalParams<T> {
    pub fn new(mass: T, a: T, b: T, hbar: T) -> Result<Self> {
        let ok = mass > T::zero() && a > T::zero() && b >= T::zero() && hbar > T::zero();
        if !ok || ![mass, a, b, hbar].iter().all(|v| v.is_finite()) {
            return Err(domain(
                "physical parameters",
                "need mass > 0, a > 0, b >= 0, hbar > 0, all finite",
            ));
        }
        Ok(Self { mass, a, b, hbar })
    }

    /// Length scale factor: z = z_scale · r with z_scale = (2 m a / ħ²)^{1/3}.
    pub fn z_scale(&self) -> T {
        (lit::<T>(2.0) * self.mass * self.a / (self.hbar * self.hbar)).cbrt()
    }

    /// Energy-to-A factor (2m / (ħ² a²))^{1/3}.
    pub fn energy_scale(&self) -> T {
        (lit::<T>(2.0) * self.mass / (self.hbar * self.hbar * self.a * self.a)).cbrt()
    }

    /// B = (4 m² / (ħ⁴ a))^{1/3} · b.
    pub fn coulomb_strength(&self) -> T {
        let h2 = self.hbar * self.hbar;
        (lit::<T>(4.0) * self.mass * self.mass / (h2 * h2 * self.a)).cbrt() * self.b
    }

    /// Physical energy corresponding to a dimensionless eigenvalue.
    pub fn energy_from_a(&self, a: T) -> T {
        a / self.energy_scale()
    }
}

/// The three dimensionless quantities produced by [`reduce`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Reduced<T> {
    pub z_scale: T,
    pub a: T,
    pub b: T,
}

pub fn reduce<T: Real>(p: &PhysicalParams<T>, energy: T) -> Reduced<T> {
    Reduced {
        z_scale: p.z_scale(),
        a: p.energy_scale() * energy,
        b: p.coulomb_strength(),
    }
}

/// Number of terms kept in the phase-integral series: j = 0 keeps L⁽¹⁾,
/// j = 1 adds L⁽³⁾.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub enum Order {
    First,
    Third,
}

impl Order {
    pub fn j(self) -> u32 {
        match self {
            Order::First => 0,
            Order::Third => 1,
        }
    }
}

impl TryFrom<u32> for Order {
    type Error = Error;

    fn try_from(j: u32) -> Result<Self> {
        match j {
            0 => Ok(Order::First),
            1 => Ok(Order::Third),
            other => Err(Error::UnsupportedOrder(other)),
        }
    }
}

impl From<Order> for u32 {
    fn from(o: Order) -> u32 {
        o.j()
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.j())
    }
}

/// One level to compute: Coulomb strength B, angular momentum l, radial index s, order j.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessCase<T> {
    #[serde(rename = "B")]
    pub b: T,
    pub l: u32,
    pub s: u32,
    pub j: Order,
}

impl<T: Real> DimensionlessCase<T> {
    pub fn new(b: T, l: u32, s: u32, j: u32) -> Result<Self> {
        if !(b.is_finite() && b >= T::zero()) {
            return Err(domain(
                "B",
                format!("{} must be finite and >= 0", to_f64(b)),
            ));
        }
        Ok(Self {
            b,
            l,
            s,
            j: Order::try_from(j)?,
        })
    }

    /// l(l + 1).
    pub fn centrifugal(&self) -> T {
        let l: T = lit(self.l as f64);
        l * (l + T::one())
    }

    /// (l + 1/2)², the Langer-modified centrifugal coefficient.
    pub fn langer(&self) -> T {
        let h: T = lit(self.l as f64 + 0.5);
        h * h
    }
}

fn check_z<T: Real>(z: T) -> Result<()> {
    if z > T::zero() && z.is_finite() {
        Ok(())
    } else {
        Err(domain("z", format!("{} must be positive", to_f64(z))))
    }
}

/// R(z) = A − z + B/z − l(l+1)/z².
pub fn r_of_z<T: Real>(a: T, case: &DimensionlessCase<T>, z: T) -> Result<T> {
    check_z(z)?;
    Ok(a - z + case.b / z - case.centrifugal() / (z * z))
}

/// Q²(z) = A − z + B/z − (l+1/2)²/z².
pub fn q2_of_z<T: Real>(a: T, case: &DimensionlessCase<T>, z: T) -> Result<T> {
    check_z(z)?;
    Ok(a - z + case.b / z - case.langer() / (z * z))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Numerov,
    PhaseIntegral,
}

/// A computed level with free-form numeric diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelResult<T> {
    #[serde(rename = "A")]
    pub a: T,
    pub e_physical: Option<T>,
    pub method: Method,
    pub diagnostics: BTreeMap<String, f64>,
}

impl<T: Real> LevelResult<T> {
    pub fn new(a: T, method: Method) -> Self {
        Self {
            a,
            e_physical: None,
            method,
            diagnostics: BTreeMap::new(),
        }
    }

    pub fn with_physical(mut self, p: &PhysicalParams<T>) -> Self {
        self.e_physical = Some(p.energy_from_a(self.a));
        self
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.diagnostics.insert(key.to_owned(), value);
        self
    }
}
