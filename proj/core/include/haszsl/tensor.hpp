#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "haszsl/error.hpp"

namespace haszsl {

// Dense row-major tensor of 64-bit floats. Scalars use shape {1}.
// node_id links the tensor to a Tape node; -1 means "not on any tape".
struct Tensor {
    std::vector<int> shape;
    std::vector<double> values;
    bool requires_grad = false;
    int node_id = -1;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
        values.assign(static_cast<std::size_t>(numel_of(shape)), 0.0);
    }
    Tensor(std::vector<int> s, std::vector<double> v) : shape(std::move(s)), values(std::move(v)) {
        if (numel_of(shape) != static_cast<long long>(values.size()))
            throw DimensionError("tensor: shape " + shape_str(shape) + " does not match value count " +
                                 std::to_string(values.size()));
    }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<int> s, double v) {
        Tensor t(std::move(s));
        for (auto& x : t.values) x = v;
        return t;
    }
    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    int numel() const { return static_cast<int>(values.size()); }
    bool is_scalar() const { return numel() == 1; }
    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
    int rank() const { return static_cast<int>(shape.size()); }

    double value() const {
        if (!is_scalar()) throw ContractError("tensor: value() requires a scalar, got shape " + shape_str(shape));
        return values[0];
    }

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    // row-major offsets
    double& at(int i, int j) { return values[static_cast<std::size_t>(i * shape[1] + j)]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i * shape[1] + j)]; }
    double& at(int i, int j, int k) {
        return values[static_cast<std::size_t>((i * shape[1] + j) * shape[2] + k)];
    }
    double at(int i, int j, int k) const {
        return values[static_cast<std::size_t>((i * shape[1] + j) * shape[2] + k)];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }

    static long long numel_of(const std::vector<int>& s) {
        long long n = 1;
        for (int d : s) {
            if (d <= 0) throw DimensionError("tensor: non-positive dimension in shape " + shape_str(s));
            n *= d;
        }
        return n;
    }

    static std::string shape_str(const std::vector<int>& s) {
        std::string out = "[";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += "x";
            out += std::to_string(s[i]);
        }
        return out + "]";
    }
};

}  // namespace haszsl
