// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace v2x {

using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<MatrixRM>;
using ConstMatMap = Eigen::Map<const MatrixRM>;
using VecMap = Eigen::Map<Eigen::VectorXd>;
using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;

// Dense row-major tensor of 64-bit reals. All layer activations,
// parameters, and gradients use this type.
class Tensor
{
  public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape))
    {
        data_.assign(static_cast<size_t>(count(shape_)), 0.0);
    }

    Tensor(std::initializer_list<int64_t> shape) : Tensor(std::vector<int64_t>(shape)) {}

    static int64_t count(const std::vector<int64_t> &shape)
    {
        int64_t n = 1;
        for (int64_t d : shape)
        {
            if (d < 0)
                throw std::invalid_argument("tensor dims must be nonnegative");
            n *= d;
        }
        return n;
    }

    const std::vector<int64_t> &shape() const { return shape_; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    int64_t dim(size_t i) const { return shape_.at(i); }

    double *data() { return data_.data(); }
    const double *data() const { return data_.data(); }

    double &operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
    void zero() { fill(0.0); }

    VecMap vec() { return VecMap(data_.data(), size()); }
    ConstVecMap vec() const { return ConstVecMap(data_.data(), size()); }

    /// Row-major matrix view; rows*cols must equal size().
    MatMap mat(int64_t rows, int64_t cols)
    {
        if (rows * cols != size())
            throw std::invalid_argument("tensor matrix view shape mismatch");
        return MatMap(data_.data(), rows, cols);
    }
    ConstMatMap mat(int64_t rows, int64_t cols) const
    {
        if (rows * cols != size())
            throw std::invalid_argument("tensor matrix view shape mismatch");
        return ConstMatMap(data_.data(), rows, cols);
    }

    /// 2-d tensors viewed with their own shape.
    MatMap mat()
    {
        if (shape_.size() != 2)
            throw std::invalid_argument("mat() needs a rank-2 tensor");
        return mat(shape_[0], shape_[1]);
    }
    ConstMatMap mat() const
    {
        if (shape_.size() != 2)
            throw std::invalid_argument("mat() needs a rank-2 tensor");
        return mat(shape_[0], shape_[1]);
    }

    bool same_shape(const Tensor &o) const { return shape_ == o.shape_; }

  private:
    std::vector<int64_t> shape_;
    std::vector<double> data_;
};

/// Named view used to iterate a model's parameter set in a fixed order.
struct NamedTensor
{
    std::string name;
    Tensor *tensor = nullptr;
};

} // namespace v2x
