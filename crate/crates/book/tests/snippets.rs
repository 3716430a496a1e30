// Generated from the guide by the build script.
include!(concat!(env!("OUT_DIR"), "/snippets.rs"));
