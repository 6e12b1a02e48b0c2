#pragma once

#include <stdexcept>
#include <string>

namespace svdcent {

/// Identifies which subsystem raised an error; the CLI maps each value to a
/// distinct process exit code.
enum class error_domain {
    graph = 2,
    spectral = 3,
    centrality = 4,
    baseline = 5,
    experiment = 6,
    io = 7,
};

/// Base class for all toolkit errors. Carries the originating subsystem so
/// callers can react (or exit) without string matching.
class error : public std::runtime_error {
public:
    error(error_domain domain, const std::string& message)
        : std::runtime_error(message), domain_(domain) {}

    error_domain domain() const noexcept { return domain_; }

    int exit_code() const noexcept { return static_cast<int>(domain_); }

private:
    error_domain domain_;
};

class graph_error : public error {
public:
    explicit graph_error(const std::string& message) : error(error_domain::graph, message) {}
};

class spectral_error : public error {
public:
    explicit spectral_error(const std::string& message) : error(error_domain::spectral, message) {}
};

class centrality_error : public error {
public:
    explicit centrality_error(const std::string& message)
        : error(error_domain::centrality, message) {}
};

class baseline_error : public error {
public:
    explicit baseline_error(const std::string& message) : error(error_domain::baseline, message) {}
};

class experiment_error : public error {
public:
    explicit experiment_error(const std::string& message)
        : error(error_domain::experiment, message) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& message) : error(error_domain::io, message) {}
};

} // namespace svdcent
