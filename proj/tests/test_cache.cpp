#include "doctest.h"

#include "mtv/values.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace mtv;
namespace fs = std::filesystem;

namespace {
fs::path fresh_dir() {
    static std::mt19937_64 rng(std::random_device{}());
    fs::path p = fs::temp_directory_path() /
                 ("mtv-cache-test-" + std::to_string(rng()));
    fs::create_directories(p);
    return p;
}
} // namespace

TEST_CASE("memory cache round trip") {
    ValueCache cache; // no file backing
    BigReal v(Rational(355, 113), 256);
    cache.put("T", "1,3", "", 256, 300, v);
    CHECK(cache.size() == 1);
    auto hit = cache.get("T", "1,3", "", 256, 300);
    REQUIRE(hit.has_value());
    CHECK((*hit - v).log2_abs() < -240);
    CHECK(!cache.get("T", "1,3", "", 512, 300).has_value()); // more precision
    CHECK(!cache.get("T", "1,3", "", 256, 400).has_value()); // more terms
    CHECK(!cache.get("t", "1,3", "", 256, 300).has_value()); // family key
    CHECK(!cache.get("T", "3,1", "", 256, 300).has_value()); // index key
}

TEST_CASE("higher-precision records serve lower requests") {
    ValueCache cache;
    BigReal v(Rational(1, 3), 512);
    cache.put("altZ", "2", "-", 512, 600, v);
    auto hit = cache.get("altZ", "2", "-", 256, 500);
    REQUIRE(hit.has_value());
    CHECK(hit->precision() == 256);
    CHECK((*hit - BigReal(Rational(1, 3), 256)).log2_abs() < -250);
}

TEST_CASE("file persistence across instances") {
    fs::path dir = fresh_dir();
    std::string file = (dir / "values.txt").string();
    BigReal v(Rational(22, 7), 320);
    {
        ValueCache cache(file);
        cache.put("T", "2,3", "", 320, 400, v);
        cache.put("t", "2,3", "", 320, 400, v);
    }
    ValueCache reopened(file);
    CHECK(reopened.size() == 2);
    auto hit = reopened.get("T", "2,3", "", 320, 400);
    REQUIRE(hit.has_value());
    CHECK((*hit - v).log2_abs() < -300);
    fs::remove_all(dir);
}

TEST_CASE("corrupted lines are skipped, valid ones kept") {
    fs::path dir = fresh_dir();
    std::string file = (dir / "values.txt").string();
    {
        ValueCache cache(file);
        cache.put("T", "4", "", 256, 300, BigReal(Rational(1, 7), 256));
    }
    {
        // append garbage: wrong field count, bad crc, non-numeric P
        std::ofstream out(file, std::ios::app);
        out << "half|a|line\n";
        out << "T|5||256|300|3.14|deadbeef\n";
        out << "T|6||banana|300|3.14|00000000\n";
    }
    ValueCache reopened(file);
    CHECK(reopened.size() == 1);
    CHECK(reopened.get("T", "4", "", 256, 300).has_value());
    CHECK(!reopened.get("T", "5", "", 256, 300).has_value());
    fs::remove_all(dir);
}

TEST_CASE("exact duplicate puts are not stored twice") {
    ValueCache cache;
    BigReal v(Rational(5, 8), 128);
    cache.put("T", "2", "", 128, 200, v);
    cache.put("T", "2", "", 128, 200, v);
    CHECK(cache.size() == 1);
}
