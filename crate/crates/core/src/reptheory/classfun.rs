use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{conjugacy_classes, partition::factorial, Partition, Permutation};
use crate::error::{Error, Result};
use crate::field::Field;

/// A function on the conjugacy classes of S_n, i.e. on the partitions of n.
#[derive(Clone, PartialEq)]
pub struct ClassFunction<F> {
    n: usize,
    values: BTreeMap<Partition, F>,
}

impl<F: Field> ClassFunction<F> {
    /// Requires a value for every partition of `n` and nothing else.
    pub fn new(n: usize, values: BTreeMap<Partition, F>) -> Result<Self> {
        let parts = Partition::all(n);
        if values.len() != parts.len() || parts.iter().any(|p| !values.contains_key(p)) {
            return Err(Error::ClassFunction(format!(
                "values must cover exactly the {} partitions of {n}",
                parts.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> F) -> Self {
        let values = Partition::all(n).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        ClassFunction { n, values: values.collect() }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| F::one())
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| F::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Option<&F> {
        self.values.get(cycle_type)
    }

    pub fn at(&self, p: &Permutation) -> &F {
        &self.values[&p.cycle_type()]
    }

    /// Values in ascending partition order.
    pub fn values(&self) -> impl Iterator<Item = (&Partition, &F)> {
        self.values.iter()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ClassFunction(format!("S_{} vs S_{}", self.n, other.n)));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, op: impl Fn(&F, &F) -> F) -> Result<Self> {
        self.check(other)?;
        let values = self
            .values
            .iter()
            .map(|(p, a)| (p.clone(), op(a, &other.values[p])))
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|(p, v)| (p.clone(), c.clone() * v.clone())).collect(),
        }
    }

    /// `(1/n!) Σ_λ |class λ| f(λ) g(λ)`. Values are real, so no conjugation.
    pub fn inner_product(&self, other: &Self) -> Result<F> {
        self.check(other)?;
        let mut sum = F::zero();
        for c in conjugacy_classes(self.n)? {
            let term = self.values[&c.cycle_type].clone() * other.values[&c.cycle_type].clone();
            sum = sum + F::from_i64(c.size as i64) * term;
        }
        Ok(sum / F::from_i64(factorial(self.n) as i64))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.values == other.values)
    }
}

impl<F: Field> fmt::Display for ClassFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(p, v)| format!("{p}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl<F: Field> fmt::Debug for ClassFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{} {}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct WireValue {
    cycle_type: Vec<usize>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct WireClassFunction {
    n: usize,
    values: Vec<WireValue>,
}

impl<F: Field> ClassFunction<F> {
    fn to_wire(&self) -> WireClassFunction {
        WireClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(p, v)| WireValue { cycle_type: p.parts().to_vec(), value: v.to_string() })
                .collect(),
        }
    }

    fn from_wire(w: WireClassFunction) -> Result<Self> {
        let mut values = BTreeMap::new();
        for v in w.values {
            let p = Partition::new(v.cycle_type)?;
            let x = v
                .value
                .parse::<F>()
                .map_err(|_| Error::ClassFunction(format!("bad value {:?}", v.value)))?;
            values.insert(p, x);
        }
        Self::new(w.n, values)
    }
}

impl<F: Field> Serialize for ClassFunction<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for ClassFunction<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_wire(WireClassFunction::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// A polynomial in t with class-function coefficients; entry k is the
/// coefficient of t^k.
#[derive(Clone, PartialEq)]
pub struct GradedClassFunction<F> {
    n: usize,
    coefficients: Vec<ClassFunction<F>>,
}

impl<F: Field> GradedClassFunction<F> {
    pub fn new(n: usize, coefficients: Vec<ClassFunction<F>>) -> Result<Self> {
        if let Some(c) = coefficients.iter().find(|c| c.n != n) {
            return Err(Error::ClassFunction(format!("coefficient on S_{} in a series over S_{n}", c.n)));
        }
        Ok(GradedClassFunction { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[ClassFunction<F>] {
        &self.coefficients
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ClassFunction<F>)> {
        self.coefficients.iter().enumerate()
    }

    /// Sum of all coefficients.
    pub fn at_one(&self) -> ClassFunction<F> {
        self.coefficients
            .iter()
            .fold(ClassFunction::zero(self.n), |acc, c| acc.add(c).expect("same n"))
    }

    /// The coefficient vector of a single class.
    pub fn at_class(&self, cycle_type: &Partition) -> Option<Vec<F>> {
        self.coefficients.iter().map(|c| c.value(cycle_type).cloned()).collect()
    }
}

impl<F: Field> fmt::Display for GradedClassFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|(k, c)| format!("t^{k} {c}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<F: Field> fmt::Debug for GradedClassFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{} {}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    degree: usize,
    values: Vec<WireValue>,
}

#[derive(Serialize, Deserialize)]
struct WireGraded {
    n: usize,
    terms: Vec<WireTerm>,
}

impl<F: Field> Serialize for GradedClassFunction<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireGraded {
            n: self.n,
            terms: self
                .terms()
                .map(|(degree, c)| WireTerm { degree, values: c.to_wire().values })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for GradedClassFunction<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireGraded::deserialize(d)?;
        let mut coefficients = Vec::new();
        for (k, t) in w.terms.into_iter().enumerate() {
            if t.degree != k {
                return Err(D::Error::custom(format!("expected degree {k}, found {}", t.degree)));
            }
            let c = ClassFunction::from_wire(WireClassFunction { n: w.n, values: t.values })
                .map_err(D::Error::custom)?;
            coefficients.push(c);
        }
        Self::new(w.n, coefficients).map_err(D::Error::custom)
    }
}
