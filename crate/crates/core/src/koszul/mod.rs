//! Graded windows, minimal resolutions and Koszulity certificates.

mod base;
mod certificate;
mod engine;
mod tensor;
mod window;

pub use base::{base_koszul_resolution, BaseResolution, BaseResolutionStep, BaseShape};
pub use certificate::{
    abar_equivalence_check, koszul_certificate, koszul_certificate_with, max_relation_degree,
    AbarReport, Bounds, CertificateOptions, CertificateRun, GeneratorCount, KoszulCertificate,
    KoszulMode, StepSummary, Verdict, Witness,
};
pub use engine::{
    differentials_compose_to_zero, is_minimal, minimal_resolution, Resolution, ResolutionStep,
    WindowLedger,
};
pub use tensor::{tensor_resolution_check, TensorComponent, TensorReport};
pub use window::{build_window, Generator, GradedWindow, WindowTarget};
