//! Layer-width description of the symmetric encoder/decoder chain.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Width description of a symmetric hourglass autoencoder.
///
/// The decoder mirrors the encoder: a spec with `hidden_dims = [512, 384]`
/// and `latent_dim = 256` describes the chain
/// `input -> 512 -> 384 -> 256 -> 384 -> 512 -> input`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArchSpec {
    pub input_dim: usize,
    pub hidden_dims: Vec<usize>,
    pub latent_dim: usize,
}

impl ArchSpec {
    pub fn new(input_dim: usize, hidden_dims: Vec<usize>, latent_dim: usize) -> Result<Self> {
        let arch = ArchSpec {
            input_dim,
            hidden_dims,
            latent_dim,
        };
        arch.validate()?;
        Ok(arch)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, w) in self.named_widths() {
            if w < 2 {
                return Err(Error::Config(format!(
                    "{name} width {w} is below the minimum of 2"
                )));
            }
        }
        Ok(())
    }

    fn named_widths(&self) -> Vec<(String, usize)> {
        let mut v = vec![("input_dim".to_string(), self.input_dim)];
        for (i, &h) in self.hidden_dims.iter().enumerate() {
            v.push((format!("hidden_dims[{i}]"), h));
        }
        v.push(("latent_dim".to_string(), self.latent_dim));
        v
    }

    /// Full width chain, encoder then decoder:
    /// `[input, h_1, .., h_E, latent, h_E, .., h_1, input]`.
    pub fn widths(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(2 * self.hidden_dims.len() + 3);
        w.push(self.input_dim);
        w.extend_from_slice(&self.hidden_dims);
        w.push(self.latent_dim);
        w.extend(self.hidden_dims.iter().rev());
        w.push(self.input_dim);
        w
    }

    /// `(fan_in, fan_out)` per layer, in order.
    pub fn layer_dims(&self) -> Vec<(usize, usize)> {
        let w = self.widths();
        w.windows(2).map(|p| (p[0], p[1])).collect()
    }

    pub fn layer_count(&self) -> usize {
        2 * (self.hidden_dims.len() + 1)
    }

    /// Total parameter count: sum over layers of `(fan_in + 1) * fan_out`.
    pub fn total_params(&self) -> usize {
        params_of_widths(&self.widths())
    }
}

impl Default for ArchSpec {
    fn default() -> Self {
        ArchSpec {
            input_dim: 784,
            hidden_dims: vec![512, 384],
            latent_dim: 256,
        }
    }
}

/// Parameter count of an arbitrary width chain.
pub fn params_of_widths(widths: &[usize]) -> usize {
    widths
        .windows(2)
        .map(|p| (p[0] + 1) * p[1])
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_arch_widths() {
        let a = ArchSpec::default();
        assert_eq!(a.widths(), vec![784, 512, 384, 256, 384, 512, 784]);
        assert_eq!(a.layer_count(), 6);
    }

    #[test]
    fn default_arch_total_params() {
        // independently derived closed-form value
        assert_eq!(ArchSpec::default().total_params(), 1_395_472);
    }

    #[test]
    fn tiny_arch_total_params() {
        // 4*3+3 + 3*2+2 + 2*3+3 + 3*4+4 = 48, hand-countable
        let a = ArchSpec::new(4, vec![3], 2).unwrap();
        assert_eq!(a.widths(), vec![4, 3, 2, 3, 4]);
        assert_eq!(a.total_params(), 48);
    }

    #[test]
    fn rejects_width_below_two() {
        assert!(ArchSpec::new(1, vec![3], 2).is_err());
        assert!(ArchSpec::new(4, vec![1], 2).is_err());
        assert!(ArchSpec::new(4, vec![3], 1).is_err());
    }
}
