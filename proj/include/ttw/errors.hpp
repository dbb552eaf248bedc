#pragma once

#include <stdexcept>
#include <string>

namespace ttw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct AsymmetryError : Error {
    int i, j;
    AsymmetryError(int i_, int j_)
        : Error("metric asymmetry at (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct NonzeroDiagonal : Error {
    int i;
    explicit NonzeroDiagonal(int i_)
        : Error("nonzero diagonal at " + std::to_string(i_)), i(i_) {}
};

struct TriangleViolation : Error {
    int i, j, k;
    TriangleViolation(int i_, int j_, int k_)
        : Error("triangle violation: d(" + std::to_string(i_) + "," + std::to_string(j_) +
                ") > d(" + std::to_string(i_) + "," + std::to_string(k_) + ") + d(" +
                std::to_string(k_) + "," + std::to_string(j_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct InstanceTooLarge : Error {
    long long size, cap;
    InstanceTooLarge(const std::string& what_kind, long long size_, long long cap_)
        : Error(what_kind + " too large: " + std::to_string(size_) + " exceeds cap " +
                std::to_string(cap_)),
          size(size_), cap(cap_) {}
};

struct EmptyInstance : Error {
    EmptyInstance() : Error("instance has no requests") {}
};

struct PolicyProtocolError : Error {
    long long t;
    PolicyProtocolError(long long t_, const std::string& msg)
        : Error("policy protocol error at t=" + std::to_string(t_) + ": " + msg), t(t_) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg)
        : Error("precondition violated: " + msg) {}
};

struct TranscriptMismatch : Error {
    explicit TranscriptMismatch(const std::string& msg)
        : Error("transcript mismatch: " + msg) {}
};

struct RequestMismatch : Error {
    explicit RequestMismatch(const std::string& msg)
        : Error("request mismatch: " + msg) {}
};

struct Cancelled : Error {
    Cancelled() : Error("operation cancelled") {}
};

}  // namespace ttw
