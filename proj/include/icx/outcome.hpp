#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace icx {

// Result of an operation that may refuse to run (instance over a configured
// limit, search budget exhausted, ...). Refusals are ordinary values, not
// exceptions: callers are expected to inspect and fall back.
template <typename T>
class Outcome {
public:
    static Outcome value(T v) {
        Outcome o;
        o.value_ = std::move(v);
        return o;
    }
    static Outcome refusal(std::string reason) {
        Outcome o;
        o.refusal_ = std::move(reason);
        return o;
    }

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& operator*() const& { return require(); }
    const T* operator->() const { return &require(); }

    const std::string& refusal_reason() const { return refusal_; }

private:
    const T& require() const {
        if (!value_) throw std::logic_error("Outcome refused: " + refusal_);
        return *value_;
    }

    std::optional<T> value_;
    std::string refusal_;
};

}  // namespace icx
