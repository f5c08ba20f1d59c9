fn main() {
    std::process::exit(gabor_frames::cli::run());
}
