//! Sampled curves shared by every tracer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub x: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFailure {
    pub x: f64,
    pub reason: String,
}

/// Ordered samples (x, values...) plus the points that could not be resolved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseCurve {
    pub name: String,
    pub x_label: String,
    pub columns: Vec<String>,
    pub points: Vec<CurvePoint>,
    pub failures: Vec<CurveFailure>,
    pub metadata: BTreeMap<String, String>,
}

impl PhaseCurve {
    pub fn new(name: &str, x_label: &str, columns: &[&str]) -> Self {
        PhaseCurve {
            name: name.to_string(),
            x_label: x_label.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            points: Vec::new(),
            failures: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, x: f64, values: Vec<f64>) {
        assert_eq!(values.len(), self.columns.len(), "column count mismatch in {}", self.name);
        self.points.push(CurvePoint { x, values });
    }

    pub fn fail(&mut self, x: f64, reason: impl Into<String>) {
        self.failures.push(CurveFailure {
            x,
            reason: reason.into(),
        });
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.insert(key.to_string(), value.to_string());
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn xs(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.x).collect()
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.points.iter().map(|p| p.values[i]).collect())
    }
}
