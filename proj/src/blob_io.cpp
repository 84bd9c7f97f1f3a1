// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#include "v2x/blob_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <memory>

static_assert(std::endian::native == std::endian::little, "blob io assumes a little-endian host");

namespace v2x {

namespace {

constexpr char kMagic[4] = {'V', '2', 'X', 'T'};
constexpr uint32_t kVersion = 1;

struct FileCloser
{
    void operator()(std::FILE *f) const
    {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

size_t elem_size(BlobType t)
{
    return t == BlobType::F64 ? 8 : 4;
}

void write_raw(const std::string &path, BlobType dtype, const std::vector<uint32_t> &dims, const void *payload,
               size_t count)
{
    uint64_t expect = 1;
    for (uint32_t d : dims)
        expect *= d;
    if (expect != count)
        throw std::invalid_argument("blob dims do not match payload size: " + path);

    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw std::runtime_error("cannot open for write: " + path);

    uint32_t head[4];
    std::memcpy(head, kMagic, 4);
    head[1] = kVersion;
    head[2] = static_cast<uint32_t>(dtype);
    head[3] = static_cast<uint32_t>(dims.size());
    if (std::fwrite(head, sizeof(head), 1, f.get()) != 1)
        throw std::runtime_error("short write: " + path);
    if (!dims.empty() && std::fwrite(dims.data(), sizeof(uint32_t), dims.size(), f.get()) != dims.size())
        throw std::runtime_error("short write: " + path);
    if (count > 0 && std::fwrite(payload, elem_size(dtype), count, f.get()) != count)
        throw std::runtime_error("short write: " + path);
}

std::vector<uint32_t> read_header(std::FILE *f, BlobType want, const std::string &path, uint64_t &count_out)
{
    uint32_t head[4];
    if (std::fread(head, sizeof(head), 1, f) != 1)
        throw CorruptBlobError("truncated header: " + path);
    if (std::memcmp(head, kMagic, 4) != 0)
        throw CorruptBlobError("bad magic: " + path);
    if (head[1] != kVersion)
        throw CorruptBlobError("unsupported version: " + path);
    if (head[2] != static_cast<uint32_t>(want))
        throw CorruptBlobError("unexpected dtype: " + path);
    const uint32_t rank = head[3];
    if (rank > 16)
        throw CorruptBlobError("implausible rank: " + path);

    std::vector<uint32_t> dims(rank);
    if (rank > 0 && std::fread(dims.data(), sizeof(uint32_t), rank, f) != rank)
        throw CorruptBlobError("truncated dims: " + path);
    uint64_t count = 1;
    for (uint32_t d : dims)
        count *= d;
    count_out = count;
    return dims;
}

template <typename T>
void read_payload(std::FILE *f, std::vector<T> &out, uint64_t count, const std::string &path)
{
    out.resize(count);
    if (count > 0 && std::fread(out.data(), sizeof(T), count, f) != count)
        throw CorruptBlobError("truncated payload: " + path);
    // A well-formed blob ends exactly at the payload.
    char probe;
    if (std::fread(&probe, 1, 1, f) == 1)
        throw CorruptBlobError("trailing bytes: " + path);
}

FilePtr open_read(const std::string &path)
{
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw std::runtime_error("cannot open for read: " + path);
    return f;
}

} // namespace

void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<float> &data)
{
    write_raw(path, BlobType::F32, dims, data.data(), data.size());
}
void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<int32_t> &data)
{
    write_raw(path, BlobType::I32, dims, data.data(), data.size());
}
void write_blob(const std::string &path, const std::vector<uint32_t> &dims, const std::vector<double> &data)
{
    write_raw(path, BlobType::F64, dims, data.data(), data.size());
}

BlobF32 read_blob_f32(const std::string &path)
{
    auto f = open_read(path);
    BlobF32 b;
    uint64_t count = 0;
    b.dims = read_header(f.get(), BlobType::F32, path, count);
    read_payload(f.get(), b.data, count, path);
    return b;
}

BlobI32 read_blob_i32(const std::string &path)
{
    auto f = open_read(path);
    BlobI32 b;
    uint64_t count = 0;
    b.dims = read_header(f.get(), BlobType::I32, path, count);
    read_payload(f.get(), b.data, count, path);
    return b;
}

BlobF64 read_blob_f64(const std::string &path)
{
    auto f = open_read(path);
    BlobF64 b;
    uint64_t count = 0;
    b.dims = read_header(f.get(), BlobType::F64, path, count);
    read_payload(f.get(), b.data, count, path);
    return b;
}

} // namespace v2x
