#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <vector>

#include "specref/errors.hpp"

namespace specref {

/// Dense row-major float tensor. Everything in this project is CPU-side and
/// at most a few hundred thousand elements, so a flat vector plus a dims
/// header is all that is needed.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<uint32_t> dims)
        : dims_(std::move(dims)), data_(numel_of(dims_), 0.0f) {}

    Tensor(std::vector<uint32_t> dims, std::vector<float> data)
        : dims_(std::move(dims)), data_(std::move(data)) {
        if (data_.size() != numel_of(dims_)) {
            throw ShapeMismatch("tensor payload does not match dims");
        }
    }

    static Tensor full(std::vector<uint32_t> dims, float value) {
        Tensor t(std::move(dims));
        std::fill(t.data_.begin(), t.data_.end(), value);
        return t;
    }

    static size_t numel_of(const std::vector<uint32_t>& dims) {
        size_t n = 1;
        for (uint32_t d : dims) n *= static_cast<size_t>(d);
        return n;
    }

    const std::vector<uint32_t>& dims() const { return dims_; }
    size_t ndim() const { return dims_.size(); }
    size_t numel() const { return data_.size(); }
    uint32_t dim(size_t i) const { return dims_[i]; }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    std::vector<float>& values() { return data_; }
    const std::vector<float>& values() const { return data_; }

    float& operator[](size_t i) { return data_[i]; }
    float operator[](size_t i) const { return data_[i]; }

    // 2-D / 3-D accessors; the caller is responsible for matching ndim.
    float& at(size_t i, size_t j) { return data_[i * dims_[1] + j]; }
    float at(size_t i, size_t j) const { return data_[i * dims_[1] + j]; }
    float& at(size_t i, size_t j, size_t k) { return data_[(i * dims_[1] + j) * dims_[2] + k]; }
    float at(size_t i, size_t j, size_t k) const { return data_[(i * dims_[1] + j) * dims_[2] + k]; }

    bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }

    bool all_finite() const {
        for (float v : data_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    bool bitwise_equal(const Tensor& other) const {
        return dims_ == other.dims_ &&
               std::memcmp(data_.data(), other.data_.data(), data_.size() * sizeof(float)) == 0;
    }

private:
    std::vector<uint32_t> dims_;
    std::vector<float> data_;
};

}  // namespace specref
