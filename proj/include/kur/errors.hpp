#pragma once

#include <stdexcept>
#include <string>

namespace kur {

// Every engine failure is an exception carrying a stable code string.
// Codes are part of the CLI surface: they map to exit classes and appear
// verbatim in JSON diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ParamMismatch : Error {
    explicit ParamMismatch(const std::string& w) : Error("ParamMismatch", w) {}
};
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& w) : Error("RingMismatch", w) {}
};
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& w) : Error("DegreeMismatch", w) {}
};
struct NotInMaximalIdeal : Error {
    explicit NotInMaximalIdeal(const std::string& w) : Error("NotInMaximalIdeal", w) {}
};
struct LatticeViolation : Error {
    explicit LatticeViolation(const std::string& w) : Error("LatticeViolation", w) {}
};
struct WrongGeometry : Error {
    explicit WrongGeometry(const std::string& w) : Error("WrongGeometry", w) {}
};
struct NotNilpotent : Error {
    explicit NotNilpotent(const std::string& w) : Error("NotNilpotent", w) {}
};
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& w) : Error("UnknownIdentity", w) {}
};
struct NotCocycle : Error {
    explicit NotCocycle(const std::string& w) : Error("NotCocycle", w) {}
};
struct NotIntegrableMod : Error {
    explicit NotIntegrableMod(const std::string& w) : Error("NotIntegrableMod", w) {}
};
struct CocycleViolation : Error {
    explicit CocycleViolation(const std::string& w) : Error("CocycleViolation", w) {}
};
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& w) : Error("PreconditionFailed", w) {}
};

// Failures that carry a witness keep its canonical rendering; callers that
// need the form re-parse it (witness texts are valid expression syntax).
class WitnessError : public Error {
public:
    WitnessError(std::string code, const std::string& what, std::string witness)
        : Error(std::move(code), what + " [witness: " + witness + "]"),
          witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

struct NotClosed : WitnessError {
    NotClosed(const std::string& w, std::string wit)
        : WitnessError("NotClosed", w, std::move(wit)) {}
};
struct Obstructed : WitnessError {
    Obstructed(const std::string& w, std::string wit)
        : WitnessError("Obstructed", w, std::move(wit)) {}
};
struct ObstructedExtension : WitnessError {
    ObstructedExtension(const std::string& w, std::string wit)
        : WitnessError("ObstructedExtension", w, std::move(wit)) {}
};
struct NotSubmanifoldDeformation : WitnessError {
    NotSubmanifoldDeformation(const std::string& w, std::string wit)
        : WitnessError("NotSubmanifoldDeformation", w, std::move(wit)) {}
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& w)
        : Error("ParseError",
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + w),
          line(line), col(col) {}
    int line;
    int col;
};
struct TypeError : Error {
    explicit TypeError(const std::string& w) : Error("TypeError", w) {}
};

} // namespace kur
