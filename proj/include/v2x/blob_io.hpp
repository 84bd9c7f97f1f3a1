// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace v2x {

// On-disk tensor container used by datasets and checkpoints.
// Layout (all little-endian):
//   16-byte header: magic "V2XT", u32 version, u32 dtype, u32 rank
//   rank x u32 dims
//   payload, row-major
// dtype: 0 = float32, 1 = int32, 2 = float64.
enum class BlobType : uint32_t
{
    F32 = 0,
    I32 = 1,
    F64 = 2,
};

struct CorruptBlobError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct BlobF32
{
    std::vector<uint32_t> dims;
    std::vector<float> data;
};
struct BlobI32
{
    std::vector<uint32_t> dims;
    std::vector<int32_t> data;
};
struct BlobF64
{
    std::vector<uint32_t> dims;
    std::vector<double> data;
};

void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<float> &data);
void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<int32_t> &data);
void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<double> &data);

BlobF32 read_blob_f32(const std::string &path);
BlobI32 read_blob_i32(const std::string &path);
BlobF64 read_blob_f64(const std::string &path);

} // namespace v2x
