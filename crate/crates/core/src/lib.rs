//! GDP nowcasting from mixed-frequency data.
//!
//! The crate bundles everything needed to run a rolling nowcasting
//! backtest of quarterly GDP growth on monthly indicator panels:
//!
//! - [`ingest`]: FRED-MD style panel parsing, per-series transformations,
//!   AR-based gap filling and windowed standardization
//! - [`autodiff`]: a small reverse-mode tape over dense tensors, with the
//!   Adam update rule
//! - [`model`]: the five competitor architectures (MLP, 1D CNN, Elman RNN,
//!   LSTM, GRU), all sharing an L1-penalized linear bottleneck encoder
//! - [`train`]: full-batch training with early stopping and seed ensembles
//! - [`dfm`]: naive constant-growth and dynamic-factor-model benchmarks
//!   (two-step estimation, Kalman smoothing, quarterly bridge regression)
//! - [`harness`]: information-set construction and the rolling backtest
//! - [`evaluation`]: RMSE/MAE, relative accuracy, Diebold-Mariano tests
//!   and cumulative squared-error ratios
//! - [`attribution`]: additive feature attribution with temporal and
//!   feature-value aggregation
//! - [`diagnostics`]: descriptive statistics, ACF/PACF, quarterly grouping
//! - [`synth`]: a deterministic synthetic fixture with a known factor
//!   structure, used by the acceptance suite and the `synth` CLI command

pub mod attribution;
pub mod autodiff;
pub mod calendar;
pub mod config;
pub mod dfm;
pub mod diagnostics;
pub mod evaluation;
pub mod harness;
pub mod ingest;
pub mod model;
pub mod synth;
pub mod train;

pub use calendar::{Month, Quarter};
pub use config::{RunConfig, RunManifest};
pub use dfm::{DfmFit, StateSpaceModel};
pub use evaluation::EvalReport;
pub use harness::{NowcastRecord, Scenario, SequenceDataset};
pub use ingest::{MonthlyPanel, QuarterlySeries};
pub use model::{Family, ModelSpec, TrainedModel};
pub use train::TrainConfig;
