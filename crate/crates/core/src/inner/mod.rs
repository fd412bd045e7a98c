//! Composite coding inner bounds.

mod config;
mod fixed;
mod fractional;
mod notation;
mod region;

pub use config::{
    all_decoding_tuples, delta, dstar, dstar_reversed, maximal_decoding_sets, server_subfamilies, DecodingConfig,
};
pub(crate) use fixed::check_weights;
pub use fixed::{fixed_lp, fixed_lp_q_form, fixed_lp_with, unit_weights, FirstStepForm, InnerOptions};
pub use fractional::{ccc_lp, ccc_sum_rate, fractional_lp, fractional_lp_with, MAX_CCC_FAMILY};
pub use region::{fixed_composite_region, fixed_composite_region_pruned};
pub use notation::{format_configs, parse_config_text, parse_configs, ConfigDraft, DecodingChoice, GroupChoice};
