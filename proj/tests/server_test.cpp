#include "dichotic/server.h"

#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"

#include "dichotic/service.h"
#include "dichotic/smf.h"

namespace dichotic {
namespace {

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    RegisterRoutes(server_, {.max_upload_bytes = 4096});
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }
  httplib::Client Client() { return httplib::Client("127.0.0.1", port_); }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, ChordEndpoint) {
  auto res = Client().Get("/api/chord/3v19");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  const Json body = Json::parse(res->body);
  EXPECT_EQ(body["composition"], Json({0, 4, 7}));
  EXPECT_EQ(body["reports"]["3"]["assignment"], "4-,0,7+");
  EXPECT_EQ(body["tdiss"]["1"], 18);
  EXPECT_EQ(body["tdiss"]["3"], 4);
  EXPECT_EQ(body["tdiss"]["2"], 2);

  auto missing = Client().Get("/api/chord/0v1");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST_F(ServerTest, AnalyzeEndpoint) {
  auto res = Client().Post("/api/analyze", R"({"notes":[60,61],"mode":2})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(Json::parse(res->body)["total"], 0);

  auto bad = Client().Post("/api/analyze", "{not json", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  auto wrong = Client().Post("/api/analyze", R"({"notes":[60,61],"mode":3})", "application/json");
  ASSERT_TRUE(wrong);
  EXPECT_EQ(wrong->status, 400);
}

TEST_F(ServerTest, ChainAndTable) {
  auto chain = Client().Get("/api/chain?n=3&limit=2");
  ASSERT_TRUE(chain);
  EXPECT_EQ(Json::parse(chain->body)["chain"][1]["id"], "3v20");
  auto table = Client().Get("/api/table?n=3");
  ASSERT_TRUE(table);
  const Json body = Json::parse(table->body);
  EXPECT_EQ(body["matched"], 165);
  EXPECT_EQ(body["rows"][0]["reference"]["tdiss"], 60);
  auto bad = Client().Get("/api/table?n=4");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

TEST_F(ServerTest, RepanEndpoint) {
  EventTimeline tl;
  tl.tracks.resize(1);
  for (int pitch : {60, 64, 67}) {
    tl.tracks[0].events.push_back(MidiEvent::NoteOn(0, 0, pitch, 100));
  }
  for (int pitch : {60, 64, 67}) {
    tl.tracks[0].events.push_back(MidiEvent::NoteOff(480, 0, pitch));
  }
  const auto smf = WriteSmf(tl);
  const std::string body(smf.begin(), smf.end());

  auto res = Client().Post("/api/repan?mode=3", body, "audio/midi");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const Json json = Json::parse(res->body);
  EXPECT_EQ(json["report"]["segments"][0]["report"]["total"], 4);
  EXPECT_FALSE(json["smf_base64"].get<std::string>().empty());

  auto raw = Client().Post("/api/repan?output=smf", body, "audio/midi");
  ASSERT_TRUE(raw);
  const EventTimeline out = ParseSmf(
      {reinterpret_cast<const std::uint8_t*>(raw->body.data()), raw->body.size()});
  EXPECT_EQ(CollectNotes(out).size(), 3u);

  auto corrupt = Client().Post("/api/repan", "MThd....", "audio/midi");
  ASSERT_TRUE(corrupt);
  EXPECT_EQ(corrupt->status, 400);

  auto large = Client().Post("/api/repan", std::string(10000, 'x'), "audio/midi");
  ASSERT_TRUE(large);
  EXPECT_EQ(large->status, 413);
}

TEST_F(ServerTest, CorsPreflight) {
  auto res = Client().Options("/api/analyze");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
}

}  // namespace
}  // namespace dichotic
