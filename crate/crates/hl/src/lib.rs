pub mod fixture;
pub mod golden;
pub mod pretty;
pub mod render;
pub mod uvparse;
pub mod verify;
