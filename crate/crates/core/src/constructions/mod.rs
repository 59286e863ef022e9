//! Free and presented carriers, the `⊗` constructions and named examples.

mod bounded;
mod examples;
mod free211;
mod freeband;
mod presentation;
mod tensor;
mod word;

pub use bounded::{free_semigroup_bounded, BoundedFreeSemigroup};
pub use examples::{
    build_named_example, build_sec7_counterexample, ex_left_star, ex_left_starprime, gamma,
    left_triv, pair_algebra, prop_both, seven_element_semigroup, PairStar, EXAMPLE_NAMES,
};
pub use free211::free_211_semigroup;
pub use freeband::{band_normal_form, FreeBand, MAX_FREE_BAND_GENERATORS};
pub use presentation::{
    power_label, presented_semigroup, two_generator_seven, PrefixDelete, Presentation,
    PresentedSemigroup, Rule, DEFAULT_STEP_BOUND, TWO_GENERATOR_SEVEN_TEXT,
};
pub use tensor::{
    ltd_tensor, rtd_tensor, tensor_partial, tensor_word, Carrier, PartialTensor, TensorMode,
    AUDIT_WORD_LENGTH,
};
pub use word::{letter_names, words_up_to, Word};
