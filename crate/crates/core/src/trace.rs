//! Named intermediates recorded while an inverse is assembled.

use crate::matrix::QMatrix;
use crate::quaternion::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceValue {
    Matrix(QMatrix),
    Scalar(Rational),
    Count(usize),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub name: String,
    pub formula: String,
    pub value: TraceValue,
}

/// Ordered map from step names to values, in evaluation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    steps: Vec<TraceStep>,
}

impl Trace {
    pub fn new() -> Self {
        Trace::default()
    }

    fn push(&mut self, name: &str, formula: &str, value: TraceValue) {
        self.steps.push(TraceStep {
            name: name.into(),
            formula: formula.into(),
            value,
        });
    }

    pub fn matrix(&mut self, name: &str, formula: &str, m: &QMatrix) {
        self.push(name, formula, TraceValue::Matrix(m.clone()));
    }

    pub fn scalar(&mut self, name: &str, formula: &str, r: &Rational) {
        self.push(name, formula, TraceValue::Scalar(r.clone()));
    }

    pub fn count(&mut self, name: &str, formula: &str, c: usize) {
        self.push(name, formula, TraceValue::Count(c));
    }

    pub fn text(&mut self, name: &str, value: &str) {
        self.push(name, "", TraceValue::Text(value.into()));
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn names(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&TraceValue> {
        self.steps
            .iter()
            .rev()
            .find(|s| s.name == name)
            .map(|s| &s.value)
    }

    pub fn get_matrix(&self, name: &str) -> Option<&QMatrix> {
        match self.get(name) {
            Some(TraceValue::Matrix(m)) => Some(m),
            _ => None,
        }
    }

    pub fn get_scalar(&self, name: &str) -> Option<&Rational> {
        match self.get(name) {
            Some(TraceValue::Scalar(r)) => Some(r),
            _ => None,
        }
    }

    pub fn get_count(&self, name: &str) -> Option<usize> {
        match self.get(name) {
            Some(TraceValue::Count(c)) => Some(*c),
            _ => None,
        }
    }

    pub fn get_text(&self, name: &str) -> Option<&str> {
        match self.get(name) {
            Some(TraceValue::Text(t)) => Some(t),
            _ => None,
        }
    }
}
