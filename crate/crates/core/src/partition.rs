use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition arity must be positive")]
    ZeroArity,
    #[error("vertex {vertex} assigned to part {part}, arity is {arity}")]
    PartOutOfRange {
        vertex: usize,
        part: usize,
        arity: usize,
    },
}

/// A map from vertices to parts `0..arity`. Parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    arity: usize,
    assignment: Vec<usize>,
}

impl Partition {
    pub fn new(arity: usize, assignment: Vec<usize>) -> Result<Self, PartitionError> {
        if arity == 0 {
            return Err(PartitionError::ZeroArity);
        }
        if let Some((vertex, &part)) = assignment.iter().enumerate().find(|(_, &p)| p >= arity) {
            return Err(PartitionError::PartOutOfRange {
                vertex,
                part,
                arity,
            });
        }
        Ok(Partition { arity, assignment })
    }

    /// Builds the partition from disjoint parts covering `0..n`.
    pub fn from_parts(n: usize, parts: &[VertexSet]) -> Result<Self, PartitionError> {
        let mut assignment = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            for v in *part {
                assignment[v] = i;
            }
        }
        let arity = parts.len();
        if let Some(vertex) = assignment.iter().position(|&p| p == usize::MAX) {
            return Err(PartitionError::PartOutOfRange {
                vertex,
                part: usize::MAX,
                arity,
            });
        }
        Self::new(arity, assignment)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn part(&self, i: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == i)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn parts(&self) -> Vec<VertexSet> {
        (0..self.arity).map(|i| self.part(i)).collect()
    }
}
